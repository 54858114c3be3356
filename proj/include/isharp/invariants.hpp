#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dataset.hpp"
#include "knots.hpp"
#include "value.hpp"

namespace isharp {

struct TraceEntry {
    std::string rule;
    std::string citation;
    std::string detail;

    ojson to_json() const {
        ojson j;
        j["rule"] = rule;
        j["citation"] = citation;
        j["detail"] = detail;
        return j;
    }
};

struct InvariantBundle {
    KnotExpr knot;
    Value nu = Value::unknown();
    Value tau = Value::unknown(false);
    Value r0 = Value::at_least(0);
    Value delta = Value::interval(Rational(0), std::nullopt, true, 0);
    Shape shape = Shape::unknown;
    // dim I#(S^3_0(K), mu) when pinned directly by the data.
    std::optional<Int> zero_surgery_mu;
    std::vector<TraceEntry> trace;

    ojson to_json(bool with_trace = false) const {
        ojson j;
        j["knot"] = to_string(knot);
        j["nu"] = nu.to_json();
        j["tau"] = tau.to_json();
        j["r0"] = r0.to_json();
        j["delta"] = delta.to_json();
        j["shape"] = to_string(shape);
        if (with_trace) {
            ojson t = ojson::array();
            for (const auto& e : trace) t.push_back(e.to_json());
            j["trace"] = t;
        }
        return j;
    }
};

struct DeduceOptions {
    // Consult the stored instanton tables (T1, T3, T4).
    bool use_tables = true;
    // Treat tau as an integer.
    bool strict = false;

    std::string key() const { return std::string(use_tables ? "t" : "-") + (strict ? "s" : "-"); }
};

namespace inv_detail {

enum class Field { nu, tau, r0 };

inline const char* field_name(Field f) {
    switch (f) {
        case Field::nu: return "nu";
        case Field::tau: return "tau";
        default: return "r0";
    }
}

inline Value interval_of(const Rational& lo, const Rational& hi, bool integral) {
    return Value::interval(lo, hi, integral);
}

// Accumulates field values, intersecting every new fact with what is known.
class Deduction {
public:
    Deduction(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts) : ds_(ds), opts_(opts) {
        b_.knot = k;
        if (opts.strict) b_.tau = Value::unknown(true);
    }

    bool set(Field f, const Value& v, const std::string& rule, const std::string& detail,
             const std::string& citation = "") {
        Value& cur = ref(f);
        auto next = cur.intersect(v);
        if (!next) {
            std::string prev = last_.count(f) ? describe(b_.trace[last_.at(f)]) : std::string("initial bounds");
            throw InconsistencyError(to_string(b_.knot) + ": " + field_name(f) + " " + v.to_string() + " from " +
                                     rule + " (" + detail + ") contradicts " + cur.to_string() + " from " + prev);
        }
        if (*next == cur) return false;
        cur = *next;
        last_[f] = record(rule, detail, citation);
        changed_ = true;
        return true;
    }

    bool set_shape(Shape s, const std::string& rule, const std::string& detail, const std::string& citation = "") {
        if (s == Shape::unknown || b_.shape == s) return false;
        if (b_.shape != Shape::unknown) {
            std::string prev = shape_at_ ? describe(b_.trace[*shape_at_]) : std::string("initial bounds");
            throw InconsistencyError(to_string(b_.knot) + ": shape " + to_string(s) + " from " + rule + " (" +
                                     detail + ") contradicts " + to_string(b_.shape) + " from " + prev);
        }
        b_.shape = s;
        shape_at_ = record(rule, detail, citation);
        changed_ = true;
        return true;
    }

    void pin_zero_mu(const Int& d, const std::string& rule, const std::string& detail, const std::string& citation) {
        if (b_.zero_surgery_mu && *b_.zero_surgery_mu != d)
            throw InconsistencyError(to_string(b_.knot) + ": conflicting pinned dims of 0-surgery with mu bundle");
        if (!b_.zero_surgery_mu) {
            b_.zero_surgery_mu = d;
            record(rule, detail, citation);
            changed_ = true;
        }
    }

    const Value& get(Field f) { return ref(f); }
    InvariantBundle& bundle() { return b_; }
    const Dataset& ds() const { return ds_; }
    const DeduceOptions& opts() const { return opts_; }
    bool take_changed() {
        bool c = changed_;
        changed_ = false;
        return c;
    }

private:
    Value& ref(Field f) {
        switch (f) {
            case Field::nu: return b_.nu;
            case Field::tau: return b_.tau;
            default: return b_.r0;
        }
    }

    static std::string describe(const TraceEntry& e) { return e.rule + " (" + e.detail + ")"; }

    std::size_t record(const std::string& rule, const std::string& detail, const std::string& citation) {
        b_.trace.push_back(TraceEntry{rule, citation.empty() ? ds_.rule_citation(rule) : citation, detail});
        return b_.trace.size() - 1;
    }

    InvariantBundle b_;
    const Dataset& ds_;
    DeduceOptions opts_;
    std::map<Field, std::size_t> last_;
    std::optional<std::size_t> shape_at_;
    bool changed_ = false;
};

inline Value tau_from_nu(const Value& nu) {
    std::optional<Rational> lo, hi;
    if (nu.lo()) lo = (*nu.lo() - 1) / 2;
    if (nu.hi()) hi = (*nu.hi() + 1) / 2;
    return Value::interval(lo, hi, false);
}

inline Value nu_from_tau(const Value& tau) {
    std::optional<Rational> lo, hi;
    if (tau.lo()) lo = 2 * *tau.lo() - 1;
    if (tau.hi()) hi = 2 * *tau.hi() + 1;
    return Value::interval(lo, hi, true);
}

// Smallest |x| over an integer interval, if bounded on the relevant side.
inline Rational min_abs(const Value& v) {
    if (v.lo() && *v.lo() > 0) return *v.lo();
    if (v.hi() && *v.hi() < 0) return -*v.hi();
    if (v.lo() && v.hi()) return 0;
    if (v.lo() || v.hi()) return 0;
    return 0;
}

inline std::optional<Rational> max_abs(const Value& v) {
    if (!v.lo() || !v.hi()) return std::nullopt;
    Rational a = *v.lo() < 0 ? Rational(-*v.lo()) : *v.lo();
    Rational b = *v.hi() < 0 ? Rational(-*v.hi()) : *v.hi();
    return a > b ? a : b;
}

inline std::string table_key(const KnotExpr& f) {
    if (f.kind == KnotExpr::Kind::unknot) return "0_1";
    return f.name;
}

inline Value json_value(const ojson& j) {
    if (j.is_null()) return Value::unknown();
    return Value::exact(Int(j.get<long long>()));
}

inline Value signed_value(const Value& v, bool mirrored) { return mirrored ? v.negate() : v; }

// Stored instanton data for the named forms of the knot.
inline void apply_tables(Deduction& d, const std::vector<KnotExpr>& forms) {
    const Dataset& ds = d.ds();
    for (const auto& f : forms) {
        if (f.kind != KnotExpr::Kind::named && f.kind != KnotExpr::Kind::unknot) continue;
        std::string key = table_key(f);
        bool m = f.mirrored;
        std::string rule = m ? "R2" : "R1";
        std::string via = m ? " of the mirror" : "";
        if (d.opts().use_tables) {
            if (const Record* r = ds.find(tables::nu_r0, key)) {
                d.set(Field::nu, signed_value(json_value(r->payload.at("nu")), m), rule, "nu from T1 " + key + via, r->citation);
                d.set(Field::r0, json_value(r->payload.at("r0")), rule, "r0 from T1 " + key + via, r->citation);
            }
            if (const Record* r = ds.find(tables::nu_tau, key)) {
                const auto& p = r->payload;
                if (!p.at("nu").is_null()) {
                    d.set(Field::nu, signed_value(json_value(p.at("nu")), m), rule, "nu from T3 " + key + via, r->citation);
                } else if (p.contains("nu_interval") && !p.at("nu_interval").is_null()) {
                    Value iv = Value::interval(Rational(p.at("nu_interval")[0].get<long long>()),
                                               Rational(p.at("nu_interval")[1].get<long long>()));
                    d.set(Field::nu, signed_value(iv, m), rule, "nu interval from T3 " + key + via, r->citation);
                }
                if (!p.at("tau").is_null())
                    d.set(Field::tau, signed_value(json_value(p.at("tau")), m), rule, "tau from T3 " + key + via, r->citation);
            }
            if (const Record* r = ds.find(tables::integer_surgeries, key)) {
                d.set(Field::nu, signed_value(json_value(r->payload.at("nu")), m), rule, "nu from T4 " + key + via, r->citation);
                d.set(Field::r0, json_value(r->payload.at("r0")), rule, "r0 from T4 " + key + via, r->citation);
            }
        }
        std::string ex_key = f.kind == KnotExpr::Kind::unknot ? "U" : f.name;
        if (const Record* r = ds.find(tables::examples, ex_key)) {
            const auto& p = r->payload;
            if (!p.at("nu").is_null())
                d.set(Field::nu, signed_value(json_value(p.at("nu")), m), rule, "nu from EX " + ex_key + via, r->citation);
            if (!p.at("r0").is_null()) d.set(Field::r0, json_value(p.at("r0")), rule, "r0 from EX " + ex_key + via, r->citation);
            if (!p.at("shape").is_null())
                d.set_shape(p.at("shape").get<std::string>() == "W" ? Shape::W : Shape::V, rule, "shape from EX " + ex_key + via,
                            r->citation);
            if (!p.at("zero_surgery_mu").is_null())
                d.pin_zero_mu(Int(p.at("zero_surgery_mu").get<long long>()), rule, "0-surgery with mu bundle from EX " + ex_key + via, r->citation);
        }
    }
}

inline bool contains_pair(const std::vector<long long>& v, long long a, long long b) {
    std::vector<long long> w = v;
    auto ia = std::find(w.begin(), w.end(), a);
    if (ia == w.end()) return false;
    w.erase(ia);
    return std::find(w.begin(), w.end(), b) != w.end();
}

// n >= 1 with P(2n-1,3,2) equal to the pretzel (sign = 1) or its mirror (sign = -1).
inline std::optional<std::pair<long long, int>> pretzel_2n_family(const std::vector<long long>& v) {
    for (int sign : {1, -1}) {
        std::vector<long long> w = v;
        auto i2 = std::find(w.begin(), w.end(), 2 * sign);
        if (i2 == w.end()) continue;
        w.erase(i2);
        auto i3 = std::find(w.begin(), w.end(), 3 * sign);
        if (i3 == w.end()) continue;
        w.erase(i3);
        long long odd = w[0] * sign;
        if (odd >= 1 && odd % 2 == 1) return std::make_pair((odd + 1) / 2, sign);
    }
    return std::nullopt;
}

inline void apply_family_rules(Deduction& d, const std::vector<KnotExpr>& forms, const StructuralData& s) {
    auto exact = [](const Int& x) { return Value::exact(x); };
    // R3, R4
    if (s.slice == Tri::yes) {
        d.set(Field::nu, exact(0), "R3", "slice");
        d.set(Field::tau, exact(0), "R3", "slice");
        d.set_shape(Shape::W, "R3", "slice");
    }
    if (s.amphichiral == Tri::yes) {
        d.set(Field::nu, exact(0), "R4", "amphichiral");
        d.set(Field::tau, exact(0), "R4", "amphichiral");
    }
    // R5
    auto gs_value = [&]() {
        return Value::interval(Rational(s.slice_genus.lo),
                               s.slice_genus.hi ? std::optional<Rational>(Rational(*s.slice_genus.hi)) : std::nullopt);
    };
    if (s.quasipositive == Tri::yes) d.set(Field::tau, gs_value(), "R5", "quasipositive, tau = g_s");
    if (s.mirror_quasipositive == Tri::yes) d.set(Field::tau, gs_value().negate(), "R5", "mirror quasipositive, tau = -g_s");
    // R6
    if (s.alternating == Tri::yes && s.signature)
        d.set(Field::tau, Value::exact(Rational(-*s.signature, 2)), "R6",
              "alternating, sigma = " + s.signature->str());
    // R7
    const Value& tau = d.get(Field::tau);
    if (tau.is_exact() && s.slice_genus.is_exact() && s.slice_genus.lo > 0 &&
        abs(tau.exact_value()) == Rational(s.slice_genus.lo)) {
        Int sign = tau.exact_value() > 0 ? 1 : -1;
        d.set(Field::nu, exact(sign * (2 * s.slice_genus.lo - 1)), "R7", "|tau| = g_s = " + s.slice_genus.lo.str());
    }
    // R9
    if (s.instanton_lspace == Tri::yes && s.genus.is_exact()) {
        Int v = 2 * s.genus.lo - 1;
        d.set(Field::nu, exact(v), "R9", "instanton L-space knot of genus " + s.genus.lo.str());
        d.set(Field::r0, exact(v), "R9", "instanton L-space knot of genus " + s.genus.lo.str());
    }
    if (s.mirror_instanton_lspace == Tri::yes && s.genus.is_exact()) {
        Int v = 2 * s.genus.lo - 1;
        d.set(Field::nu, exact(-v), "R9", "mirror of an instanton L-space knot of genus " + s.genus.lo.str());
        d.set(Field::r0, exact(v), "R9", "mirror of an instanton L-space knot of genus " + s.genus.lo.str());
    }
    for (const auto& f : forms) {
        using K = KnotExpr::Kind;
        if (f.kind == K::torus) {
            long long a = std::llabs(f.params[0]), q = f.params[1];
            Int v = Int(a * q - a - q);
            std::string det = to_string(f);
            d.set(Field::nu, exact(f.params[0] < 0 ? Int(-v) : v), "R8", det);
            d.set(Field::r0, exact(v), "R8", det);
        } else if (f.kind == K::twist) {
            long long n = f.params[0];
            Int nu = (n % 2 == 0) ? 0 : -1;
            if (f.mirrored) nu = -nu;
            d.set(Field::r0, exact(n), "R10", to_string(f));
            d.set(Field::nu, exact(nu), "R10", to_string(f));
        } else if (f.kind == K::pretzel) {
            if (contains_pair(f.params, 3, -3)) {
                d.set(Field::nu, exact(0), "R11", to_string(f));
                d.set(Field::r0, exact(4), "R11", to_string(f));
                d.set_shape(Shape::W, "R11", to_string(f));
            } else if (auto fam = pretzel_2n_family(f.params)) {
                long long n = fam->first;
                d.set(Field::nu, exact(Int(fam->second * (2 * n - 1))), "R12", to_string(f));
                d.set(Field::r0, exact(Int(6 * n - 1)), "R12", to_string(f));
            }
        }
    }
}

// Interval tightening between the fields.
inline void tighten(Deduction& d, const StructuralData& s) {
    const char* R = "R14";
    d.set(Field::tau, tau_from_nu(d.get(Field::nu)), R, "|2tau - nu| <= 1");
    d.set(Field::nu, nu_from_tau(d.get(Field::tau)), R, "|2tau - nu| <= 1");
    if (s.slice_genus.hi) {
        Int g = *s.slice_genus.hi;
        Int bound = g > 0 ? Int(2 * g - 1) : Int(0);
        d.set(Field::nu, Value::interval(Rational(-bound), Rational(bound)), R, "|nu| <= max(2g_s - 1, 0)");
        d.set(Field::tau, Value::interval(Rational(-g), Rational(g), false), R, "|tau| <= g_s");
    }
    const Value& nu = d.get(Field::nu);
    Value r0_floor = Value::at_least(min_abs(nu));
    if (nu.parity()) r0_floor = *r0_floor.intersect(Value::interval(std::nullopt, std::nullopt, true, nu.parity()));
    d.set(Field::r0, r0_floor, R, "r0 >= |nu|, r0 = nu mod 2");
    const Value& r0 = d.get(Field::r0);
    if (r0.hi()) d.set(Field::nu, Value::interval(-*r0.hi(), *r0.hi()), R, "|nu| <= r0");
    if (r0.parity()) d.set(Field::nu, Value::interval(std::nullopt, std::nullopt, true, r0.parity()), R, "nu = r0 mod 2");
    auto& b = d.bundle();
    if (b.shape == Shape::W) d.set(Field::nu, Value::exact(0), R, "W-shaped knots have nu = 0");
    if (!b.nu.contains(0)) d.set_shape(Shape::V, R, "nu != 0");
    if (d.opts().strict) d.set(Field::tau, Value::unknown(true), R, "tau integral (strict mode)");
}

inline void finish(InvariantBundle& b) {
    Value delta = b.r0.plus(b.nu.negate());
    auto even = Value::interval(Rational(0), std::nullopt, true, 0);
    auto v = delta.intersect(even);
    if (!v) throw InconsistencyError(to_string(b.knot) + ": delta = r0 - nu is not a nonnegative even integer");
    b.delta = *v;
}

}  // namespace inv_detail

InvariantBundle deduce(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts = {});

namespace inv_detail {

inline InvariantBundle deduce_atom(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts) {
    Deduction d(k, ds, opts);
    std::vector<KnotExpr> forms = equivalent_forms(k, ds);
    StructuralData s = structural(k, ds);
    for (int round = 0; round < 16; ++round) {
        apply_tables(d, forms);
        apply_family_rules(d, forms, s);
        tighten(d, s);
        if (!d.take_changed()) break;
    }
    InvariantBundle b = d.bundle();
    finish(b);
    return b;
}

inline InvariantBundle deduce_cable(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts) {
    Deduction d(k, ds, opts);
    StructuralData s = structural(k, ds);
    for (int round = 0; round < 8; ++round) {
        apply_family_rules(d, {}, s);
        tighten(d, s);
        if (!d.take_changed()) break;
    }
    InvariantBundle b = d.bundle();
    finish(b);
    return b;
}

inline InvariantBundle deduce_sum(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts) {
    Deduction d(k, ds, opts);
    const char* R = "R13";
    struct Part {
        KnotExpr knot;
        AtomKey key;
        bool amphichiral;
        bool slice;
        InvariantBundle bundle;
    };
    std::vector<Part> parts;
    for (const auto& c : k.children) {
        StructuralData cs = structural(c, ds);
        parts.push_back(Part{c, atom_key(c, ds), cs.amphichiral == Tri::yes, cs.slice == Tri::yes, deduce(c, ds, opts)});
    }
    std::vector<bool> gone(parts.size(), false);
    std::vector<std::string> dropped;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].slice) {
            gone[i] = true;
            dropped.push_back(to_string(parts[i].knot) + " (slice)");
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (gone[i]) continue;
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (gone[j] || parts[i].key.key() != parts[j].key.key()) continue;
            if (parts[i].key.mirrored != parts[j].key.mirrored || parts[i].amphichiral) {
                gone[i] = gone[j] = true;
                dropped.push_back(to_string(parts[i].knot) + " # " + to_string(parts[j].knot) + " (mirror pair)");
                break;
            }
        }
    }
    std::vector<const Part*> rest;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!gone[i]) rest.push_back(&parts[i]);
    std::string note = dropped.empty() ? std::string() : "dropping ";
    for (std::size_t i = 0; i < dropped.size(); ++i) note += (i ? ", " : "") + dropped[i];

    StructuralData s = structural(k, ds);
    if (rest.empty()) {
        d.set(Field::nu, Value::exact(0), R, note + "; the sum is slice");
        d.set(Field::tau, Value::exact(0), R, note + "; the sum is slice");
        d.set_shape(Shape::W, "R3", "the sum is slice");
    } else if (rest.size() == 1) {
        const auto& b = rest.front()->bundle;
        std::string why = (note.empty() ? std::string() : note + "; ") + "concordant to " + to_string(rest.front()->knot);
        d.set(Field::nu, b.nu, R, why);
        d.set(Field::tau, b.tau, R, why);
    } else {
        Value tau = Value::exact(0);
        for (const Part* p : rest) tau = tau.plus(p->bundle.tau);
        d.set(Field::tau, tau, R, "tau is additive");
        std::vector<const Part*> v_parts;
        for (const Part* p : rest)
            if (p->bundle.shape != Shape::W) v_parts.push_back(p);
        Value nu = Value::exact(0);
        for (const Part* p : v_parts) nu = nu.plus(p->bundle.nu);
        long long slack = v_parts.empty() ? 0 : static_cast<long long>(v_parts.size()) - 1;
        nu = nu.widened(Rational(slack));
        std::string why = "|nu(K#L) - nu(K) - nu(L)| <= 1";
        if (v_parts.size() < rest.size()) why += ", W-shaped summands absorbed";
        d.set(Field::nu, nu, R, why);
    }
    for (int round = 0; round < 8; ++round) {
        apply_family_rules(d, {}, s);
        tighten(d, s);
        if (!d.take_changed()) break;
    }
    InvariantBundle b = d.bundle();
    finish(b);
    return b;
}

}  // namespace inv_detail

// Invariant bundle of k, from rules R1-R14 applied to a fixed point.
inline InvariantBundle deduce(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts) {
    std::string key = "deduce:" + opts.key() + ":" + to_string(k);
    if (auto hit = ds.memo_get<InvariantBundle>(key)) return *hit;
    InvariantBundle b;
    if (k.kind == KnotExpr::Kind::sum) b = inv_detail::deduce_sum(k, ds, opts);
    else if (k.kind == KnotExpr::Kind::cable) b = inv_detail::deduce_cable(k, ds, opts);
    else b = inv_detail::deduce_atom(k, ds, opts);
    return *ds.memo_put(key, std::make_shared<const InvariantBundle>(std::move(b)));
}

inline Value tau_interval_from_nu(const Int& nu) {
    return Value::interval(Rational(nu - 1, 2), Rational(nu + 1, 2), false);
}

inline Value crossing_change_bound(const Rational& tau_minus) {
    return Value::interval(tau_minus, tau_minus + 1, false);
}

struct SelfLinkingBound {
    std::optional<Int> bound;
    std::optional<Int> stored;
    bool violated = false;
};

inline SelfLinkingBound sl_upper_bound(const KnotExpr& k, const Dataset& ds) {
    SelfLinkingBound out;
    InvariantBundle b = deduce(k, ds);
    out.stored = structural(k, ds).max_self_linking;
    if (!b.tau.is_exact()) return out;
    Rational v = 2 * b.tau.exact_value() - 1;
    if (denominator(v) != 1) return out;
    out.bound = numerator(v);
    out.violated = out.stored && *out.stored > *out.bound;
    return out;
}

inline std::pair<Int, Int> lspace_knot_invariants(const KnotExpr& k, const Dataset& ds) {
    StructuralData s = structural(k, ds);
    if (s.instanton_lspace != Tri::yes)
        throw DomainError(to_string(k) + " is not known to be an instanton L-space knot");
    if (!s.genus.is_exact()) throw DomainError("the genus of " + to_string(k) + " is unknown");
    Int v = 2 * s.genus.lo - 1;
    return {v, v};
}

}  // namespace isharp
