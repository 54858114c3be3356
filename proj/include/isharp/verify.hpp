#pragma once

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "invariants.hpp"
#include "knots.hpp"
#include "surgery.hpp"

namespace isharp {

// Table keys name knots by their Rolfsen label; 0_1 is the unknot.
inline KnotExpr knot_of_key(const std::string& key) { return key == "0_1" ? unknot() : parse_knot(key); }

namespace verify_detail {

inline DimDomain stored_dim(const ojson& v) {
    if (v.is_null()) return DimDomain::all();
    if (v.is_number()) return DimDomain::exact(v.get<long long>());
    if (v.contains("exact")) return DimDomain::exact(v.at("exact").get<long long>());
    std::vector<Int> xs;
    for (const auto& x : v.at("candidates")) xs.emplace_back(x.get<long long>());
    return DimDomain::of(xs);
}

inline Value stored_value(const ojson& v) {
    if (v.is_null()) return Value::unknown();
    return Value::exact(Int(v.get<long long>()));
}

}  // namespace verify_detail

// Checks that the structural data, the stored tables and the registered
// identities are mutually consistent. Throws IntegrityError otherwise.
inline void check_integrity(const Dataset& ds) {
    using namespace tables;
    DeduceOptions with_tables;
    try {
        for (const char* t : {knots, nu_r0, nu_tau, integer_surgeries}) {
            for (const Record* r : ds.table(t)) {
                KnotExpr k = knot_of_key(r->key);
                deduce(k, ds, with_tables);
                deduce(k, ds, DeduceOptions{false, false});
                if (std::string(t) == integer_surgeries && !r->payload.at("same_knot").is_null()) {
                    InvariantBundle a = deduce(k, ds, with_tables);
                    InvariantBundle b = deduce(parse_knot(r->payload.at("same_knot").get<std::string>()), ds, with_tables);
                    if (!a.nu.intersect(b.nu) || !a.r0.intersect(b.r0))
                        throw IntegrityError("T4 " + r->key + ": invariants differ from " +
                                             r->payload.at("same_knot").get<std::string>());
                }
            }
        }
        network(ds, with_tables);
        network(ds, DeduceOptions{false, false});
        for (const Record* r : ds.table(integer_surgeries)) {
            DimResult d = surgery_dim(knot_of_key(r->key), integer_slope(r->payload.at("n").get<long long>()), ds, with_tables);
            if (!d.domain.contains(r->payload.at("dim").get<long long>()))
                throw IntegrityError("T4 " + r->key + ": stored dim " + std::to_string(r->payload.at("dim").get<long long>()) +
                                     " but the invariants give " + d.to_string());
        }
        for (const Record* r : ds.table(tables::census)) census_dim(std::stoi(r->key), ds, with_tables);
    } catch (const InconsistencyError& e) {
        throw;
    } catch (const IntegrityError&) {
        throw;
    } catch (const DomainError& e) {
        throw IntegrityError(std::string("dataset entry cannot be evaluated: ") + e.what());
    }
}

inline Dataset load_text(std::string_view text) {
    Dataset ds = Dataset::parse(text);
    check_integrity(ds);
    return ds;
}

inline Dataset load(const std::string& path) {
    Dataset ds = Dataset::read_file(path);
    check_integrity(ds);
    return ds;
}

// The bundled dataset after its integrity check.
inline const Dataset& default_dataset() {
    static const Dataset& ds = [] () -> const Dataset& {
        check_integrity(bundled_dataset());
        return bundled_dataset();
    }();
    return ds;
}

struct CheckRow {
    std::string table;
    std::string key;
    std::string field;
    std::string expected;
    std::string got;
    bool pass = false;
    std::string note;

    ojson to_json() const {
        ojson j;
        j["table"] = table;
        j["key"] = key;
        j["field"] = field;
        j["expected"] = expected;
        j["got"] = got;
        j["pass"] = pass;
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

struct VerifyReport {
    std::vector<CheckRow> rows;

    bool ok() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.pass ? 0 : 1;
        return n;
    }
    void append(const VerifyReport& o) { rows.insert(rows.end(), o.rows.begin(), o.rows.end()); }

    ojson to_json() const {
        ojson j;
        j["ok"] = ok();
        j["checked"] = rows.size();
        j["failed"] = failures();
        ojson rs = ojson::array();
        for (const auto& r : rows) rs.push_back(r.to_json());
        j["rows"] = rs;
        return j;
    }
};

namespace verify_detail {

inline void row(VerifyReport& rep, std::string table, std::string key, std::string field, std::string expected,
                std::string got, bool pass, std::string note = "") {
    rep.rows.push_back(CheckRow{std::move(table), std::move(key), std::move(field), std::move(expected), std::move(got),
                                pass, std::move(note)});
}

// Runs one check, turning an exception into a failed row.
inline void guarded(VerifyReport& rep, const std::string& table, const std::string& key, const std::string& field,
                    const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        row(rep, table, key, field, "", "error", false, e.what());
    }
}

inline const DeduceOptions kDerived{false, false};

// Evaluates a census manifold through its own registered description rather
// than the solved network.
inline DimResult route_dim(const ManifoldDesc& d, const Dataset& ds) {
    if (d.kind != ManifoldDesc::Kind::census) return dim(d, ds, kDerived);
    std::string key = std::to_string(d.index);
    if (const Record* r = ds.find(tables::census_surgeries, key))
        return route_dim(parse_manifold(r->payload.at("manifold").get<std::string>()), ds);
    if (const Record* r = ds.find(tables::census_covers, key))
        return branched_cover_dim(parse_knot(r->payload.at("knot").get<std::string>()), ds, kDerived);
    return census_dim(d.index, ds, kDerived);
}

}  // namespace verify_detail

// Re-derives one table from structural data and family rules, without
// consulting the stored instanton tables.
inline VerifyReport verify_table(const std::string& table, const Dataset& ds) {
    using namespace verify_detail;
    using namespace tables;
    VerifyReport rep;
    const DeduceOptions& nt = kDerived;
    if (table == nu_r0) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "nu,r0", [&] {
                InvariantBundle b = refined_invariants(knot_of_key(r->key), ds, nt);
                Value nu = stored_value(r->payload.at("nu")), r0 = stored_value(r->payload.at("r0"));
                row(rep, table, r->key, "nu", nu.to_string(), b.nu.to_string(), b.nu == nu);
                row(rep, table, r->key, "r0", r0.to_string(), b.r0.to_string(), b.r0.is_exact() && r0.is_exact() && b.r0.exact_value() == r0.exact_value());
            });
        }
    } else if (table == nu_tau) {
        std::vector<std::string> open;
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "nu,tau", [&] {
                InvariantBundle b = refined_invariants(knot_of_key(r->key), ds, nt);
                const auto& p = r->payload;
                if (!p.at("nu").is_null()) {
                    Value nu = stored_value(p.at("nu"));
                    row(rep, table, r->key, "nu", nu.to_string(), b.nu.to_string(), b.nu == nu);
                } else {
                    Value nu = Value::interval(Rational(p.at("nu_interval")[0].get<long long>()),
                                               Rational(p.at("nu_interval")[1].get<long long>()));
                    row(rep, table, r->key, "nu", nu.to_string(), b.nu.to_string(),
                        !b.nu.is_exact() && b.nu.lo() == nu.lo() && b.nu.hi() == nu.hi());
                }
                if (!b.nu.is_exact()) open.push_back(r->key);
                Value tau = Value::exact(Int(p.at("tau").get<long long>()));
                row(rep, table, r->key, "tau", tau.to_string(), b.tau.to_string(), b.tau.is_exact() && b.tau.exact_value() == tau.exact_value());
            });
        }
        std::string got;
        for (const auto& k : open) got += (got.empty() ? "" : ",") + k;
        std::string expected;
        for (const Record* r : ds.table(table))
            if (r->payload.at("nu").is_null()) expected += (expected.empty() ? "" : ",") + r->key;
        row(rep, table, "*", "nu intervals", expected, got, got == expected);
    } else if (table == integer_surgeries) {
        for (const Record* r : ds.table(table)) {
            const auto& p = r->payload;
            KnotExpr k = knot_of_key(r->key);
            Slope s = integer_slope(p.at("n").get<long long>());
            Int expected = p.at("dim").get<long long>();
            guarded(rep, table, r->key, "dim", [&] {
                DimResult d = surgery_dim(k, s, ds, nt);
                row(rep, table, r->key, "dim", expected.str(), d.to_string(), d.is_exact() && d.value() == expected);
            });
            guarded(rep, table, r->key, "nu,r0", [&] {
                InvariantBundle b = refined_invariants(k, ds, nt);
                Value nu = stored_value(p.at("nu")), r0 = stored_value(p.at("r0"));
                row(rep, table, r->key, "nu", nu.to_string(), b.nu.to_string(), b.nu == nu);
                row(rep, table, r->key, "r0", r0.to_string(), b.r0.to_string(), b.r0.is_exact() && b.r0.exact_value() == r0.exact_value());
            });
            if (!p.at("homeomorphic_to").is_null()) {
                guarded(rep, table, r->key, "homeomorphic_to", [&] {
                    std::string route = p.at("homeomorphic_to").get<std::string>();
                    DimResult d = dim(parse_manifold(route), ds, nt);
                    row(rep, table, r->key, "dim via " + route, expected.str(), d.to_string(), d.is_exact() && d.value() == expected);
                });
            }
            if (!p.at("same_knot").is_null()) {
                guarded(rep, table, r->key, "same_knot", [&] {
                    std::string other = p.at("same_knot").get<std::string>();
                    DimResult d = surgery_dim(parse_knot(other), s, ds, nt);
                    row(rep, table, r->key, "dim via " + other, expected.str(), d.to_string(), d.is_exact() && d.value() == expected);
                });
            }
        }
    } else if (table == tables::census) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "dim", [&] {
                DimDomain expected = stored_dim(r->payload.at("dim").is_null() ? ojson{{"candidates", r->payload.at("dim_candidates")}}
                                                                                : r->payload.at("dim"));
                DimResult d = census_dim(std::stoi(r->key), ds, nt);
                row(rep, table, r->key, "dim", expected.to_string(), d.to_string(), d.domain == expected);
            });
        }
    } else if (table == census_surgeries || table == census_covers) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "dim", [&] {
                const auto& p = r->payload;
                DimResult d = table == census_surgeries
                                  ? dim(parse_manifold(p.at("manifold").get<std::string>()), ds, nt)
                                  : branched_cover_dim(parse_knot(p.at("knot").get<std::string>()), ds, nt);
                Int expected = p.at("dim").get<long long>();
                row(rep, table, r->key, "dim", expected.str(), d.to_string(), d.is_exact() && d.value() == expected);
                Int h1 = p.at("h1").get<long long>();
                row(rep, table, r->key, "h1", h1.str(), d.euler ? d.euler->str() : "?", d.euler && *d.euler == h1);
            });
        }
    } else if (table == census_triads) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "result", [&] {
                const auto& p = r->payload;
                DimResult a = route_dim(parse_manifold(p.at("m0").at("manifold").get<std::string>()), ds);
                DimResult b = route_dim(parse_manifold(p.at("m1").at("manifold").get<std::string>()), ds);
                row(rep, table, r->key, "m0 dim", std::to_string(p.at("m0").at("dim").get<long long>()), a.to_string(),
                    a.is_exact() && a.value() == p.at("m0").at("dim").get<long long>());
                row(rep, table, r->key, "m1 dim", std::to_string(p.at("m1").at("dim").get<long long>()), b.to_string(),
                    b.is_exact() && b.value() == p.at("m1").at("dim").get<long long>());
                DimResult c = triad_bounds(a, b, Int(p.at("h1").get<long long>()), ds);
                DimDomain expected = stored_dim(p.at("result"));
                row(rep, table, r->key, "result", expected.to_string(), c.to_string(), c.domain == expected);
            });
        }
    } else if (table == spectral) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "dim", [&] {
                const auto& p = r->payload;
                DimResult d = branched_cover_dim(parse_knot(r->key), ds, nt);
                bool stored_known = !p.at("dim").is_null();
                DimDomain expected = stored_dim(p.at("dim"));
                row(rep, table, r->key, "dim", stored_known ? expected.to_string() : "unknown", d.to_string(),
                    stored_known ? d.domain == expected : !d.domain.is_finite());
                Int kh = p.at("odd_khovanov_dim").get<long long>();
                std::string strict;
                if (d.is_exact()) strict = d.value() < kh ? "strict" : "not strict";
                else if (d.domain.is_finite() && *d.domain.max() < kh) strict = "possible-only";
                else strict = "unknown";
                std::string expected_strict = !stored_known ? "unknown" : (expected.is_exact() ? "strict" : "possible-only");
                row(rep, table, r->key, "Kh' > dim", expected_strict, strict, strict == expected_strict);
            });
        }
    } else if (table == identities) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "identity", [&] {
                IdentityReport ir = verify_identity(parse_manifold(r->payload.at("lhs").get<std::string>()),
                                                    parse_manifold(r->payload.at("rhs").get<std::string>()), ds, nt);
                row(rep, table, r->key, "identity", "equal", to_string(ir.status), ir.status == IdentityStatus::equal, ir.note);
            });
        }
    } else if (table == triangles) {
        for (const Record* r : ds.table(table)) {
            guarded(rep, table, r->key, "triangle", [&] {
                const auto& p = r->payload;
                DimResult a = dim(parse_manifold(p.at("m0").get<std::string>()), ds, nt);
                DimResult b = dim(parse_manifold(p.at("m1").get<std::string>()), ds, nt);
                ManifoldDesc target = parse_manifold(p.at("target").get<std::string>());
                DimResult bound = triad_bounds(a, b, *h1_order(target, ds), ds);
                DimResult t = dim_or_bounds(target, ds, nt);
                bool sub = !t.domain.intersect(bound.domain).empty() && t.domain.intersect(bound.domain) == t.domain;
                row(rep, table, r->key, "triangle", bound.to_string(), t.to_string(), sub);
            });
        }
    } else {
        throw DomainError("unknown table '" + table + "'");
    }
    return rep;
}

struct IdentityTally {
    std::size_t equal = 0, compatible = 0, contradiction = 0;
};

// Checks the registered homeomorphism families over |m|, |n| <= limit.
inline VerifyReport verify_identities(const Dataset& ds, long long limit = 50) {
    using namespace verify_detail;
    VerifyReport rep;
    std::map<std::string, IdentityTally> tally;
    std::map<std::string, std::string> first_bad;
    auto check = [&](const KnotExpr& k, const Slope& s) {
        for (const auto& h : homeo_identities(k, s)) {
            IdentityReport ir = verify_identity(k, s, h.knot, h.slope, ds);
            IdentityTally& t = tally[h.family];
            if (ir.status == IdentityStatus::equal) ++t.equal;
            else if (ir.status == IdentityStatus::compatible) ++t.compatible;
            else {
                ++t.contradiction;
                if (!first_bad.count(h.family))
                    first_bad[h.family] = to_string(surgery(k, s)) + " vs " + to_string(surgery(h.knot, h.slope)) + ": " + ir.note;
            }
        }
    };
    for (long long m = -limit; m <= limit; ++m)
        for (long long n = -limit; n <= limit; ++n) {
            if (n == 0) continue;
            KnotExpr odd = two_bridge(2 * m + 1, 2 * n);
            check(odd, integer_slope(4 * n - 1));
            check(odd, integer_slope(4 * n + 1));
            if (m != 0) {
                KnotExpr even = two_bridge(2 * m, 2 * n);
                check(even, integer_slope(1));
                check(even, integer_slope(-1));
            }
        }
    for (long long n = -limit; n <= limit; ++n) {
        check(pretzel(n, 3, -3), integer_slope(-2));
        check(pretzel(n, 3, -3), integer_slope(2));
    }
    for (const char* c : {"3_1", "m(3_1)", "T(2,5)", "m(T(2,5))", "4_1", "5_2"}) {
        KnotExpr companion = parse_knot(c);
        for (long long q = 2; q <= limit; ++q)
            for (long long p = -limit; p <= limit; ++p) {
                if (std::gcd(p, q) != 1) continue;
                check(companion, reduce(Int(p) * q + 1, Int(q) * q));
                check(companion, reduce(Int(p) * q - 1, Int(q) * q));
            }
    }
    for (const auto& [family, t] : tally) {
        std::string got = std::to_string(t.equal) + " equal, " + std::to_string(t.compatible) + " compatible, " +
                          std::to_string(t.contradiction) + " contradictions";
        row(rep, "identities", family, "consistency", "no contradictions", got, t.contradiction == 0 && t.equal > 0,
            first_bad.count(family) ? first_bad[family] : "");
    }
    for (long long n = 1; n <= limit; ++n) {
        std::string key = "n=" + std::to_string(n);
        guarded(rep, "identities", key, "twist chain", [&] {
            KnotExpr tw = twist(2 * n - 1);
            DimResult a = surgery_dim(tw, integer_slope(-1), ds, kDerived);
            DimResult b = surgery_dim(parse_knot("3_1"), reduce(-1, n), ds, kDerived);
            bool listed = false;
            for (const auto& h : homeo_identities(two_bridge(2, 2 * n), integer_slope(-1)))
                listed |= h.knot == two_bridge(2, 2) && h.slope == reduce(-1, n);
            bool pass = listed && atom_key(tw, ds).key() == atom_key(two_bridge(2, 2 * n), ds).key() && a.is_exact() &&
                        b.is_exact() && a.value() == 2 * n - 1 && b.value() == 2 * n - 1;
            row(rep, "identities", key, "twist chain", std::to_string(2 * n - 1), a.to_string() + " = " + b.to_string(), pass);
        });
    }
    return rep;
}

inline const std::vector<std::string>& verifiable_tables() {
    static const std::vector<std::string> t = {tables::nu_r0,          tables::census,        tables::nu_tau,
                                               tables::integer_surgeries, tables::spectral,   tables::census_surgeries,
                                               tables::census_covers,  tables::census_triads, tables::identities,
                                               tables::triangles};
    return t;
}

inline VerifyReport verify_all(const Dataset& ds, long long identity_limit = 50) {
    VerifyReport rep;
    for (const auto& t : verifiable_tables()) rep.append(verify_table(t, ds));
    rep.append(verify_identities(ds, identity_limit));
    return rep;
}

namespace verify_detail {

inline std::string cell(const ojson& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_object() && v.contains("exact")) return cell(v.at("exact"));
    if (v.is_object() && v.contains("candidates")) return "{" + cell(v.at("candidates")) + "}";
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) out += (out.empty() ? "" : ",") + cell(x);
        return out;
    }
    return v.dump();
}

}  // namespace verify_detail

// Tab-separated rows in the column order of the printed tables.
inline std::string export_tsv(const std::string& table, const Dataset& ds) {
    using verify_detail::cell;
    static const std::map<std::string, std::vector<std::string>> columns = {
        {tables::nu_r0, {"nu", "r0"}},
        {tables::census, {"name", "h1", "dim"}},
        {tables::nu_tau, {"nu", "tau"}},
        {tables::integer_surgeries, {"n", "dim", "nu", "r0", "homeomorphic_to", "same_knot"}},
        {tables::spectral, {"det", "odd_khovanov_dim", "sigma2", "dim"}},
        {tables::census_surgeries, {"name", "snappy_knot", "h1", "dim"}},
        {tables::census_covers, {"name", "knot", "quasi_alternating", "h1", "dim"}},
        {tables::census_triads, {"name", "h1", "m0", "m1", "result"}},
    };
    auto it = columns.find(table);
    if (it == columns.end()) throw DomainError("no export layout for table '" + table + "'");
    std::ostringstream out;
    out << (table == tables::census || table == tables::census_surgeries || table == tables::census_covers ||
                    table == tables::census_triads
                ? "index"
                : "knot");
    for (const auto& c : it->second) out << '\t' << c;
    out << '\n';
    for (const Record* r : ds.table(table)) {
        out << r->key;
        for (const auto& c : it->second) {
            const ojson& v = r->payload.at(c);
            std::string text;
            if (table == tables::census && c == "dim" && v.is_null()) text = "{" + cell(r->payload.at("dim_candidates")) + "}";
            else if (table == tables::nu_tau && c == "nu" && v.is_null()) text = "[" + cell(r->payload.at("nu_interval")) + "]";
            else if (table == tables::census_triads && (c == "m0" || c == "m1"))
                text = cell(v.at("name")) + " " + cell(v.at("manifold")) + " h1=" + cell(v.at("h1")) + " dim=" + cell(v.at("dim"));
            else text = cell(v);
            out << '\t' << text;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace isharp
