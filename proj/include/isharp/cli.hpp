#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isharp.hpp"

namespace isharp::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2, integrity_failure = 3 };

inline constexpr const char* kDataEnv = "ISHARP_DATA";

namespace cli_detail {

inline std::string scalar(const ojson& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) out += (out.empty() ? "" : ", ") + scalar(x);
        return "[" + out + "]";
    }
    if (v.is_object() && v.contains("exact")) return scalar(v.at("exact"));
    if (v.is_object() && (v.contains("lo") || v.contains("hi"))) {
        std::string out = "[" + (v.value("lo", ojson()).is_null() ? std::string("-inf") : scalar(v.at("lo"))) + ", " +
                          (v.value("hi", ojson()).is_null() ? std::string("inf") : scalar(v.at("hi"))) + "]";
        if (v.contains("parity") && !v.at("parity").is_null()) out += v.at("parity").get<std::string>() == "odd" ? " odd" : " even";
        return out;
    }
    return v.dump();
}

inline bool is_table(const ojson& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& x : v)
        if (!x.is_object()) return false;
    return true;
}

inline void render_table(const ojson& rows, std::ostream& out, const std::string& indent) {
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [k, v] : r.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end() && !is_table(v)) cols.push_back(k);
    std::vector<std::size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string s = r.contains(cols[c]) ? scalar(r.at(cols[c])) : "";
            width[c] = std::max(width[c], s.size());
            line.push_back(std::move(s));
        }
        cells.push_back(std::move(line));
    }
    auto print = [&](const std::vector<std::string>& line) {
        out << indent;
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << '\n';
    };
    print(cols);
    for (const auto& line : cells) print(line);
}

// Human-readable rendering of a structured result.
inline void render_pretty(const ojson& v, std::ostream& out, const std::string& indent = "") {
    if (is_table(v)) {
        render_table(v, out, indent);
        return;
    }
    if (!v.is_object()) {
        out << indent << scalar(v) << '\n';
        return;
    }
    for (const auto& [k, x] : v.items()) {
        if (is_table(x) || (x.is_object() && !x.contains("exact") && !x.contains("lo") && !x.contains("hi"))) {
            out << indent << k << ":\n";
            render_pretty(x, out, indent + "  ");
        } else {
            out << indent << k << ": " << scalar(x) << '\n';
        }
    }
}

inline ojson triad_json(const Slope& s) {
    Triad t = triad(s);
    ojson j;
    j["slope"] = to_string(s);
    j["ab"] = to_string(t.ab);
    j["cd"] = to_string(t.cd);
    j["ef"] = to_string(t.ef);
    j["sum"] = t.sum_case == SumCase::ab_is_sum ? "ab" : "cd";
    return j;
}

inline ojson cf_json(const Slope& s) {
    ContinuedFraction cf = neg_cf(s);
    ojson j;
    j["slope"] = to_string(s);
    ojson a = ojson::array();
    for (const auto& x : cf.a) a.push_back(json_number(x));
    j["cf"] = a;
    ojson conv = ojson::array();
    auto cs = convergents(cf);
    for (std::size_t i = 1; i < cs.size(); ++i) conv.push_back(cs[i].first.str() + "/" + cs[i].second.str());
    j["convergents"] = conv;
    return j;
}

inline ojson census_json(int i, const Dataset& ds, bool trace) {
    DimResult r = census_dim(i, ds);
    ojson j;
    j["index"] = i;
    const Record* row = ds.find(tables::census, std::to_string(i));
    j["name"] = row ? row->payload.at("name") : ojson();
    ojson dims = r.to_json(true, trace);
    for (const auto& [k, v] : dims.items()) j[k] = v;
    return j;
}

}  // namespace cli_detail

// Parses argv, runs one command and writes its result to out; diagnostics go to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Framed instanton homology dimensions of surgeries, branched covers and census manifolds", "isharp"};
    app.require_subcommand(1);
    std::string data_path;
    bool pretty = false, trace = false;
    app.add_option("--data", data_path, "Dataset file (default: $" + std::string(kDataEnv) + " or the bundled data)");
    app.add_flag("--pretty", pretty, "Print a human-readable table instead of JSON");
    app.add_flag("--trace", trace, "Include the deduction trace with citations");

    std::string manifold, knot_text, slope_text, which = "all", table_name, census_arg;
    std::vector<std::string> summands;
    long long cp = 0, cq = 0;
    bool graded = false;

    auto* c_dim = app.add_subcommand("dim", "Dimension of I# of a manifold");
    c_dim->add_option("manifold", manifold, "e.g. \"surg(6_2; -9/1)\"")->required();
    c_dim->add_flag("--graded", graded, "Include the Z/2 grading split");
    c_dim->add_flag("--trace", trace, "Include the deduction trace");
    auto* c_inv = app.add_subcommand("invariants", "nu, tau, r0 and shape of a knot");
    c_inv->add_option("knot", knot_text)->required();
    c_inv->add_flag("--trace", trace, "Include the deduction trace");
    auto* c_triad = app.add_subcommand("triad", "Exact-triangle triad of a slope");
    c_triad->add_option("slope", slope_text)->required();
    auto* c_cf = app.add_subcommand("cf", "Negative continued fraction and convergents of a slope");
    c_cf->add_option("slope", slope_text)->required();
    auto* c_cable = app.add_subcommand("cable", "Invariants of the (p,q)-cable of a knot");
    c_cable->add_option("p", cp)->required();
    c_cable->add_option("q", cq)->required();
    c_cable->add_option("knot", knot_text)->required();
    c_cable->add_flag("--trace", trace, "Include the deduction trace");
    auto* c_sum = app.add_subcommand("sum", "Invariants of a connected sum");
    c_sum->add_option("knots", summands)->required();
    c_sum->add_flag("--trace", trace, "Include the deduction trace");
    auto* c_census = app.add_subcommand("census", "Dimension of a census manifold");
    c_census->add_option("index", census_arg, "0..19 or all")->required();
    c_census->add_flag("--trace", trace, "Include the deduction trace");
    auto* c_dcover = app.add_subcommand("dcover", "Dimension of the branched double cover of a knot");
    c_dcover->add_option("knot", knot_text)->required();
    c_dcover->add_flag("--trace", trace, "Include the deduction trace");
    auto* c_verify = app.add_subcommand("verify", "Re-derive the tables and check the identity families");
    c_verify->add_option("what", which, "a table id (T1..T8, IDENT, TRI), identities or all");
    auto* c_export = app.add_subcommand("export", "Print a table as tab-separated values");
    c_export->add_option("table", table_name)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    std::optional<Dataset> loaded;
    const Dataset* ds = nullptr;
    try {
        if (data_path.empty())
            if (const char* env = std::getenv(kDataEnv)) data_path = env;
        if (data_path.empty()) {
            ds = &default_dataset();
        } else {
            loaded.emplace(load(data_path));
            ds = &*loaded;
        }
    } catch (const IntegrityError& e) {
        err << "integrity failure: " << e.what() << '\n';
        return integrity_failure;
    } catch (const ParseError& e) {
        err << "integrity failure: malformed dataset: " << e.what() << '\n';
        return integrity_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }

    ojson result;
    int code = ok;
    try {
        if (c_dim->parsed()) {
            ManifoldDesc d = parse_manifold(manifold);
            DimResult r = dim(d, *ds);
            result = r.to_json(graded, trace);
            result["manifold"] = to_string(d);
        } else if (c_inv->parsed()) {
            result = refined_invariants(parse_knot(knot_text), *ds).to_json(trace);
        } else if (c_triad->parsed()) {
            result = triad_json(parse_slope(slope_text));
        } else if (c_cf->parsed()) {
            result = cf_json(parse_slope(slope_text));
        } else if (c_cable->parsed()) {
            result = refined_invariants(cable(cp, cq, parse_knot(knot_text)), *ds).to_json(trace);
        } else if (c_sum->parsed()) {
            std::vector<KnotExpr> parts;
            for (const auto& s : summands) parts.push_back(parse_knot(s));
            result = refined_invariants(parts.size() == 1 ? parts[0] : connected_sum(parts), *ds).to_json(trace);
        } else if (c_census->parsed()) {
            if (census_arg == "all") {
                result = ojson::array();
                for (int i = 0; i < kCensusSize; ++i) result.push_back(census_json(i, *ds, trace));
            } else {
                Int i = parse_int(census_arg);
                if (i < 0 || i >= kCensusSize) throw DomainError("census index must be in [0, 19], got " + i.str());
                result = census_json(static_cast<int>(i), *ds, trace);
            }
        } else if (c_dcover->parsed()) {
            KnotExpr k = parse_knot(knot_text);
            result = branched_cover_dim(k, *ds).to_json(false, trace);
            result["knot"] = to_string(k);
        } else if (c_verify->parsed()) {
            VerifyReport rep;
            if (which == "all") rep = verify_all(*ds);
            else if (which == "identities") rep = verify_identities(*ds);
            else rep = verify_table(which, *ds);
            result = rep.to_json();
            if (!rep.ok()) code = integrity_failure;
        } else if (c_export->parsed()) {
            out << export_tsv(table_name, *ds);
            return ok;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage_error;
    } catch (const IntegrityError& e) {
        err << "integrity failure: " << e.what() << '\n';
        return integrity_failure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
    if (pretty) render_pretty(result, out);
    else out << result.dump(2) << '\n';
    return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace isharp::cli
