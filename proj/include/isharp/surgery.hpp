#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dataset.hpp"
#include "dim_domain.hpp"
#include "invariants.hpp"
#include "knots.hpp"
#include "slopes.hpp"

namespace isharp {

enum class Bundle { trivial, mu };

inline std::string to_string(Bundle b) { return b == Bundle::mu ? "mu" : "trivial"; }

struct ManifoldDesc {
    enum class Kind { sphere, surgery, lens, dcover, census, opaque };

    Kind kind = Kind::sphere;
    KnotExpr knot;
    Slope slope;
    Bundle bundle = Bundle::trivial;
    Int p = 1, q = 0;
    int index = 0;
    std::string name;
    // |H_1| for opaque manifolds; 0 when H_1 is infinite.
    Int h1 = 0;

    friend bool operator==(const ManifoldDesc&, const ManifoldDesc&) = default;
};

inline ManifoldDesc sphere() { return ManifoldDesc{}; }

inline ManifoldDesc surgery(const KnotExpr& k, const Slope& s, Bundle b = Bundle::trivial) {
    if (b == Bundle::mu && !(s.p == 0 && s.q == 1))
        throw DomainError("the mu bundle is only defined for 0-surgery, got slope " + to_string(s));
    ManifoldDesc d;
    d.kind = ManifoldDesc::Kind::surgery;
    d.knot = k;
    d.slope = s;
    d.bundle = b;
    return d;
}

inline ManifoldDesc lens(const Int& p, const Int& q) {
    if (!(p > q && q >= 1) || gcd_int(p, q) != 1)
        throw DomainError("lens(p,q) needs p > q >= 1 with gcd 1, got lens(" + p.str() + "," + q.str() + ")");
    ManifoldDesc d;
    d.kind = ManifoldDesc::Kind::lens;
    d.p = p;
    d.q = q;
    return d;
}

inline ManifoldDesc dcover(const KnotExpr& k) {
    ManifoldDesc d;
    d.kind = ManifoldDesc::Kind::dcover;
    d.knot = k;
    return d;
}

inline constexpr int kCensusSize = 20;

inline ManifoldDesc census(int i) {
    if (i < 0 || i >= kCensusSize)
        throw DomainError("census index must be in [0, " + std::to_string(kCensusSize - 1) + "], got " + std::to_string(i));
    ManifoldDesc d;
    d.kind = ManifoldDesc::Kind::census;
    d.index = i;
    return d;
}

inline ManifoldDesc opaque(std::string name, const Int& h1) {
    ManifoldDesc d;
    d.kind = ManifoldDesc::Kind::opaque;
    d.name = std::move(name);
    d.h1 = abs_int(h1);
    return d;
}

inline std::string to_string(const ManifoldDesc& d) {
    using K = ManifoldDesc::Kind;
    switch (d.kind) {
        case K::sphere: return "S3";
        case K::surgery:
            return "surg(" + to_string(d.knot) + "; " + to_string(d.slope) + (d.bundle == Bundle::mu ? "; mu" : "") + ")";
        case K::lens: return "lens(" + d.p.str() + "," + d.q.str() + ")";
        case K::dcover: return "dcover(" + to_string(d.knot) + ")";
        case K::census: return "census(" + std::to_string(d.index) + ")";
        case K::opaque: return "opaque(" + d.name + "," + (d.h1 == 0 ? std::string("inf") : d.h1.str()) + ")";
    }
    return "?";
}

namespace surg_detail {

inline std::string_view trim(std::string_view t, std::size_t& off) {
    while (!t.empty() && t.front() == ' ') {
        t.remove_prefix(1);
        ++off;
    }
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    return t;
}

// Splits the argument list of "head(...)" at top-level separators.
inline std::vector<std::pair<std::string_view, std::size_t>> split_args(std::string_view body, std::size_t off, char sep) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        char c = i < body.size() ? body[i] : sep;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && c == sep) {
            std::size_t o = off + start;
            auto piece = trim(body.substr(start, i - start), o);
            out.emplace_back(piece, o);
            start = i + 1;
        }
    }
    return out;
}

inline KnotExpr knot_at(std::string_view text, std::size_t off) {
    try {
        return parse_knot(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string("in knot: ") + e.what(), off + e.position());
    }
}

inline Int int_at(std::string_view text, std::size_t off) { return parse_int(text, off); }

}  // namespace surg_detail

// Grammar: "S3", "surg(K; p/q[; mu])", "lens(p,q)", "dcover(K)", "census(i)", "opaque(name,h1)".
inline ManifoldDesc parse_manifold(std::string_view text) {
    using namespace surg_detail;
    std::size_t off = 0;
    text = trim(text, off);
    if (text == "S3") return sphere();
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') throw ParseError("expected a manifold description", off);
    std::string_view head = text.substr(0, open);
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    std::size_t body_off = off + open + 1;
    if (head == "surg") {
        auto args = split_args(body, body_off, ';');
        if (args.size() < 2 || args.size() > 3) throw ParseError("surg needs a knot, a slope and an optional bundle", body_off);
        KnotExpr k = knot_at(args[0].first, args[0].second);
        Slope s;
        try {
            s = parse_slope(args[1].first);
        } catch (const ParseError& e) {
            throw ParseError(std::string("in slope: ") + e.what(), args[1].second + e.position());
        }
        Bundle b = Bundle::trivial;
        if (args.size() == 3) {
            if (args[2].first == "mu") b = Bundle::mu;
            else if (args[2].first != "trivial") throw ParseError("bundle must be 'mu' or 'trivial'", args[2].second);
        }
        return surgery(k, s, b);
    }
    if (head == "lens") {
        auto args = split_args(body, body_off, ',');
        if (args.size() != 2) throw ParseError("lens needs two integers", body_off);
        return lens(int_at(args[0].first, args[0].second), int_at(args[1].first, args[1].second));
    }
    if (head == "dcover") return dcover(knot_at(trim(body, body_off), body_off));
    if (head == "census") {
        Int i = int_at(trim(body, body_off), body_off);
        if (i < 0 || i >= kCensusSize) throw DomainError("census index out of range: " + i.str());
        return census(static_cast<int>(i));
    }
    if (head == "opaque") {
        auto comma = body.rfind(',');
        if (comma == std::string_view::npos) throw ParseError("opaque needs a name and |H1|", body_off);
        std::size_t o1 = body_off, o2 = body_off + comma + 1;
        auto name = trim(body.substr(0, comma), o1);
        auto h1 = trim(body.substr(comma + 1), o2);
        return opaque(std::string(name), h1 == "inf" ? Int(0) : int_at(h1, o2));
    }
    throw ParseError("unknown manifold kind '" + std::string(head) + "'", off);
}

struct DimResult {
    DimDomain domain = DimDomain::all();
    // |chi| = |H_1| for rational homology spheres, 0 otherwise; unset when unknown.
    std::optional<Int> euler;
    std::vector<TraceEntry> trace;

    bool is_exact() const { return domain.is_exact(); }
    Int value() const { return domain.exact_value(); }

    std::string kind() const {
        if (domain.is_exact()) return "exact";
        if (domain.is_finite()) return "candidates";
        if (domain.max()) return "interval";
        return "unknown";
    }

    std::optional<std::pair<Int, Int>> graded() const {
        if (!domain.is_exact() || !euler) return std::nullopt;
        Int d = domain.exact_value();
        return std::make_pair((d + *euler) / 2, (d - *euler) / 2);
    }

    ojson to_json(bool with_graded = true, bool with_trace = false) const {
        ojson j;
        j["kind"] = kind();
        if (domain.is_exact()) {
            j["dim"] = json_number(domain.exact_value());
        } else if (domain.is_finite()) {
            ojson v = ojson::array();
            for (const auto& x : domain.values()) v.push_back(json_number(x));
            j["values"] = v;
        } else {
            j["lo"] = domain.min() ? json_number(*domain.min()) : ojson();
            j["hi"] = domain.max() ? json_number(*domain.max()) : ojson();
            j["modulus"] = json_number(domain.modulus());
            j["residue"] = json_number(domain.residue());
        }
        j["euler"] = euler ? json_number(*euler) : ojson();
        if (with_graded) {
            auto g = graded();
            j["graded"] = g ? ojson::array({json_number(g->first), json_number(g->second)}) : ojson();
        }
        if (with_trace) {
            ojson t = ojson::array();
            for (const auto& e : trace) t.push_back(e.to_json());
            j["trace"] = t;
        }
        return j;
    }

    std::string to_string() const { return domain.to_string(); }
};

inline DimResult exact_result(const Int& d, std::optional<Int> euler) {
    DimResult r;
    r.domain = DimDomain::exact(d);
    r.euler = std::move(euler);
    return r;
}

// Possible (nu, shape, r0) values of a knot: one cell per nu and shape.
struct KnotCell {
    Int nu;
    Shape shape = Shape::V;
    DimDomain r0;
    friend bool operator==(const KnotCell&, const KnotCell&) = default;
};

struct KnotState {
    KnotExpr rep;
    InvariantBundle bundle;
    std::optional<std::vector<KnotCell>> cells;  // unset while nu is unbounded
};

namespace surg_detail {

inline DimDomain domain_of(const Value& v) {
    Int lo = v.lo() ? ceil_div(numerator(*v.lo()), denominator(*v.lo())) : Int(0);
    if (lo < 0) lo = 0;
    std::optional<Int> hi;
    if (v.hi()) hi = floor_div(numerator(*v.hi()), denominator(*v.hi()));
    if (hi && *hi < 0) return DimDomain::none();
    if (v.parity()) return DimDomain::progression(lo, hi, 2, *v.parity());
    return DimDomain::progression(lo, hi);
}

inline std::vector<KnotCell> materialize(const InvariantBundle& b, const Int& bound) {
    std::vector<KnotCell> cells;
    Int lo = -bound, hi = bound;
    if (b.nu.lo() && ceil_div(numerator(*b.nu.lo()), denominator(*b.nu.lo())) > lo) lo = ceil_div(numerator(*b.nu.lo()), denominator(*b.nu.lo()));
    if (b.nu.hi() && floor_div(numerator(*b.nu.hi()), denominator(*b.nu.hi())) < hi) hi = floor_div(numerator(*b.nu.hi()), denominator(*b.nu.hi()));
    DimDomain r0 = domain_of(b.r0);
    for (Int nu = lo; nu <= hi; ++nu) {
        if (!b.nu.contains(Rational(nu))) continue;
        DimDomain r = r0.intersect(DimDomain::progression(abs_int(nu), std::nullopt, 2, abs_int(nu) % 2));
        if (r.empty()) continue;
        std::vector<Shape> shapes;
        if (nu != 0) shapes = {Shape::V};
        else if (b.shape == Shape::unknown) shapes = {Shape::V, Shape::W};
        else shapes = {b.shape};
        for (Shape s : shapes)
            if (!(s == Shape::V && b.shape == Shape::W)) cells.push_back(KnotCell{nu, s, r});
    }
    return cells;
}

// Knots with more possible values of nu than this are evaluated by intervals.
inline constexpr long long kMaxCells = 256;

inline std::optional<Int> nu_bound_of(const InvariantBundle& b) {
    auto m = inv_detail::max_abs(b.nu);
    if (!m) return std::nullopt;
    return floor_div(numerator(*m), denominator(*m));
}

inline bool small_enough(const Int& bound) { return 2 * bound + 1 <= kMaxCells; }

// dim = a r0 + b on the cell, or nullopt when the cell does not determine it.
inline std::optional<std::pair<Int, Int>> cell_map(const KnotCell& c, const Slope& s, Bundle bundle) {
    if (s.p != 0) return std::make_pair(s.q, abs_int(s.p - s.q * c.nu));
    if (c.shape == Shape::W) return std::make_pair(Int(1), bundle == Bundle::mu ? Int(0) : Int(2));
    if (c.nu != 0 || bundle == Bundle::trivial) return std::make_pair(Int(1), abs_int(c.nu));
    return std::nullopt;
}

inline DimDomain euler_domain(const Slope& s) { return DimDomain::euler(s.p); }

inline DimDomain cells_image(const std::vector<KnotCell>& cells, const Slope& s, Bundle bundle) {
    DimDomain out = DimDomain::none();
    DimDomain eu = euler_domain(s);
    for (const auto& c : cells) {
        auto m = cell_map(c, s, bundle);
        DimDomain piece = m ? c.r0.affine(m->first, m->second) : eu;
        out = out.unite(piece);
    }
    return out.intersect(eu);
}

inline std::vector<KnotCell> cells_restrict(const std::vector<KnotCell>& cells, const Slope& s, Bundle bundle,
                                            const DimDomain& d) {
    std::vector<KnotCell> out;
    for (const auto& c : cells) {
        auto m = cell_map(c, s, bundle);
        if (!m) {
            out.push_back(c);
            continue;
        }
        KnotCell n = c;
        n.r0 = c.r0.intersect(d.preimage(m->first, m->second));
        if (!n.r0.empty()) out.push_back(n);
    }
    return out;
}

// Interval evaluation of q r0 + |p - q nu| when nu has too many values to enumerate.
inline DimDomain interval_image(const InvariantBundle& b, const Slope& s, Bundle bundle) {
    DimDomain eu = euler_domain(s);
    Rational r_lo = b.r0.lo() ? *b.r0.lo() : Rational(0);
    Rational lo = Rational(s.q) * r_lo;
    std::optional<Rational> hi;
    if (s.p != 0) {
        Rational x(s.p, s.q);
        if (b.nu.lo() && x < *b.nu.lo()) lo += Rational(s.q) * (*b.nu.lo() - x);
        if (b.nu.hi() && x > *b.nu.hi()) lo += Rational(s.q) * (x - *b.nu.hi());
        if (b.r0.hi() && b.nu.lo() && b.nu.hi()) {
            Rational a = x - *b.nu.lo(), c = *b.nu.hi() - x;
            Rational far = a > c ? a : c;
            hi = Rational(s.q) * (*b.r0.hi() + far);
        }
    } else if (bundle == Bundle::trivial && b.shape == Shape::W) {
        lo += 2;
    }
    Int l = ceil_div(numerator(lo), denominator(lo));
    std::optional<Int> h;
    if (hi) h = floor_div(numerator(*hi), denominator(*hi));
    return eu.intersect(DimDomain::progression(l, h));
}

}  // namespace surg_detail

// The bound |nu| <= (d + |p|) / (2q) from a bounded surgery dimension d.
inline Int nu_bound_from_dim(const Int& d, const Slope& s) { return floor_div(d + abs_int(s.p), 2 * s.q); }

inline KnotState make_knot_state(const KnotExpr& rep, const Dataset& ds, const DeduceOptions& opts) {
    KnotState st;
    st.rep = rep;
    st.bundle = deduce(rep, ds, opts);
    if (auto bound = surg_detail::nu_bound_of(st.bundle); bound && surg_detail::small_enough(*bound))
        st.cells = surg_detail::materialize(st.bundle, *bound);
    return st;
}

inline std::optional<Int> lens_key_q(const Int& p, const Int& q) {
    Int best = q;
    auto consider = [&](Int x) {
        x = ((x % p) + p) % p;
        if (x != 0 && x < best) best = x;
    };
    Int inv = 0;
    for (Int x = 1; x < p; ++x)
        if ((x * q) % p == 1) {
            inv = x;
            break;
        }
    consider(q);
    consider(p - q);
    if (inv != 0) {
        consider(inv);
        consider(p - inv);
    }
    return best;
}

// Key shared by orientation reversals and re-descriptions of the same manifold.
inline std::string manifold_key(const ManifoldDesc& d, const Dataset& ds) {
    using K = ManifoldDesc::Kind;
    switch (d.kind) {
        case K::sphere: return "S3";
        case K::surgery: {
            if (d.slope.is_infinite()) return "S3";
            AtomKey a = atom_key(d.knot, ds);
            if (a.rep.kind == KnotExpr::Kind::unknot && d.slope.p != 0) {
                Int p = abs_int(d.slope.p);
                if (p == 1) return "S3";
                Int q = ((d.slope.q % p) + p) % p;
                return "lens(" + p.str() + "," + lens_key_q(p, q)->str() + ")";
            }
            Slope s = a.mirrored ? Slope{-d.slope.p, d.slope.q} : d.slope;
            return "surg(" + a.key() + "; " + to_string(s) + (d.bundle == Bundle::mu ? "; mu" : "") + ")";
        }
        case K::lens: return "lens(" + d.p.str() + "," + lens_key_q(d.p, d.q)->str() + ")";
        case K::dcover: return "dcover(" + atom_key(d.knot, ds).key() + ")";
        case K::census: return "census(" + std::to_string(d.index) + ")";
        case K::opaque: return "opaque(" + d.name + ")";
    }
    return "?";
}

// |H_1|, 0 when infinite, unset when unknown.
inline std::optional<Int> h1_order(const ManifoldDesc& d, const Dataset& ds) {
    using K = ManifoldDesc::Kind;
    switch (d.kind) {
        case K::sphere: return Int(1);
        case K::surgery: return d.slope.is_infinite() ? Int(1) : abs_int(d.slope.p);
        case K::lens: return d.p;
        case K::dcover: return structural(d.knot, ds).determinant;
        case K::census:
            if (const Record* r = ds.find(tables::census, std::to_string(d.index))) return Int(r->payload.at("h1").get<long long>());
            return std::nullopt;
        case K::opaque: return d.h1;
    }
    return std::nullopt;
}

// Exact-triangle and homeomorphism constraints among the manifolds named in
// the dataset, solved to a fixed point.
class Network {
public:
    struct Var {
        std::string key;
        ManifoldDesc desc;
        DimDomain dom = DimDomain::all();
        std::optional<Int> h1;
        std::string knot;  // atom key for surgeries on knots
        Slope slope;       // slope relative to the atom representative
        Bundle bundle = Bundle::trivial;
    };

    struct Constraint {
        enum class Kind { equal, triangle } kind;
        std::vector<std::size_t> vars;
        std::string rule;
        std::string detail;
        std::string citation;
    };

    Network(const Dataset& ds, const DeduceOptions& opts) : ds_(ds), opts_(opts) {
        build();
        solve();
    }

    const Var* var(const std::string& key) const {
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &vars_[it->second];
    }

    const KnotState* knot(const std::string& key) const {
        auto it = knots_.find(key);
        return it == knots_.end() ? nullptr : &it->second;
    }

    const std::vector<Var>& vars() const { return vars_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::map<std::string, KnotState>& knots() const { return knots_; }

private:
    std::size_t add(const ManifoldDesc& d, const std::string& context) {
        std::string key = manifold_key(d, ds_);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        Var v;
        v.key = key;
        v.desc = d;
        v.h1 = h1_order(d, ds_);
        if (v.h1) v.dom = DimDomain::euler(*v.h1);
        using K = ManifoldDesc::Kind;
        if (key == "S3") {
            v.dom = DimDomain::exact(1);
        } else if (key.rfind("lens(", 0) == 0) {
            v.dom = DimDomain::exact(*v.h1);
        } else if (d.kind == K::dcover) {
            StructuralData s = structural(d.knot, ds_);
            if (s.thin_odd_khovanov == Tri::yes && s.determinant) v.dom = DimDomain::exact(*s.determinant);
        } else if (d.kind == K::surgery) {
            AtomKey a = atom_key(d.knot, ds_);
            v.knot = a.key();
            v.slope = a.mirrored ? Slope{-d.slope.p, d.slope.q} : d.slope;
            v.bundle = d.bundle;
            if (!knots_.count(v.knot)) {
                add_knot(a.rep);
                if (auto again = index_.find(key); again != index_.end()) return again->second;
            }
        }
        (void)context;
        vars_.push_back(v);
        index_[key] = vars_.size() - 1;
        return vars_.size() - 1;
    }

    void add_knot(const KnotExpr& rep) {
        std::string key = to_string(rep);
        knots_[key] = make_knot_state(rep, ds_, opts_);
        StructuralData s = structural(rep, ds_);
        if (s.alexander && s.alexander->size() <= 3 && s.genus.hi && *s.genus.hi <= 2) {
            const auto& a = *s.alexander;
            Int a1 = a.size() > 1 ? a[1] : Int(0), a2 = a.size() > 2 ? a[2] : Int(0);
            Int floor = 4 * abs_int(a2) + 2 * abs_int(a1 + 2 * a2);
            std::size_t i = add(surgery(rep, integer_slope(0), Bundle::mu), "S8");
            restrict(i, DimDomain::progression(floor, std::nullopt, 4, floor % 4), "S8",
                     "Alexander floor for " + key + ": " + floor.str() + " + 4k");
        }
    }

    std::size_t add_text(const std::string& text, const std::string& context) {
        try {
            return add(parse_manifold(text), context);
        } catch (const DomainError& e) {
            throw IntegrityError(context + ": bad manifold '" + text + "': " + e.what());
        }
    }

    void equal(std::size_t a, std::size_t b, const std::string& rule, const std::string& detail, const std::string& cite) {
        const Var& x = vars_[a];
        const Var& y = vars_[b];
        if (x.h1 && y.h1 && *x.h1 != *y.h1)
            throw IntegrityError(detail + ": |H1| differs (" + x.h1->str() + " vs " + y.h1->str() + ")");
        constraints_.push_back(Constraint{Constraint::Kind::equal, {a, b}, rule, detail, cite});
    }

    void triangle(std::size_t a, std::size_t b, std::size_t c, const std::string& detail, const std::string& cite) {
        constraints_.push_back(Constraint{Constraint::Kind::triangle, {a, b, c}, "S5", detail, cite});
    }

    bool restrict(std::size_t i, const DimDomain& d, const std::string& rule, const std::string& detail) {
        Var& v = vars_[i];
        DimDomain n = v.dom.intersect(d);
        if (n.empty())
            throw InconsistencyError(v.key + ": " + rule + " (" + detail + ") allows " + d.to_string() +
                                     " but the other constraints allow " + v.dom.to_string());
        if (n == v.dom) return false;
        v.dom = n;
        return true;
    }

    void build() {
        using namespace tables;
        const Dataset& ds = ds_;
        if (opts_.use_tables) {
            for (const Record* r : ds.table(integer_surgeries)) {
                const auto& p = r->payload;
                KnotExpr k = parse_knot(r->key);
                std::size_t i = add(surgery(k, integer_slope(p.at("n").get<long long>())), "T4 " + r->key);
                restrict(i, DimDomain::exact(p.at("dim").get<long long>()), "R1", "T4 " + r->key);
            }
        }
        for (const Record* r : ds.table(integer_surgeries)) {
            const auto& p = r->payload;
            if (p.at("homeomorphic_to").is_null()) continue;
            KnotExpr k = parse_knot(r->key);
            std::size_t a = add(surgery(k, integer_slope(p.at("n").get<long long>())), "T4 " + r->key);
            std::size_t b = add_text(p.at("homeomorphic_to").get<std::string>(), "T4 " + r->key);
            equal(a, b, "S6", "T4 " + r->key, r->citation);
        }
        for (const Record* r : ds.table(identities)) {
            std::size_t a = add_text(r->payload.at("lhs").get<std::string>(), "IDENT " + r->key);
            std::size_t b = add_text(r->payload.at("rhs").get<std::string>(), "IDENT " + r->key);
            equal(a, b, "S6", "IDENT " + r->key, r->citation);
        }
        for (const Record* r : ds.table(examples)) {
            const auto& p = r->payload;
            if (p.at("zero_surgery_mu").is_null()) continue;
            std::size_t i = add(surgery(parse_knot(r->key), integer_slope(0), Bundle::mu), "EX " + r->key);
            restrict(i, DimDomain::exact(p.at("zero_surgery_mu").get<long long>()), "R1", "EX " + r->key);
        }
        for (const Record* r : ds.table(spectral)) {
            const auto& p = r->payload;
            if (p.at("sigma2").is_null()) continue;
            std::size_t a = add(dcover(parse_knot(r->key)), "T5 " + r->key);
            std::size_t b = add_text(p.at("sigma2").get<std::string>(), "T5 " + r->key);
            equal(a, b, "S6", "T5 " + r->key, r->citation);
        }
        for (const Record* r : ds.table(census_surgeries)) {
            std::size_t a = add(isharp::census(std::stoi(r->key)), "T6 " + r->key);
            std::size_t b = add_text(r->payload.at("manifold").get<std::string>(), "T6 " + r->key);
            check_h1(a, r->payload.at("h1"), "T6 " + r->key);
            equal(a, b, "S9", "T6 " + r->key, r->citation);
        }
        for (const Record* r : ds.table(census_covers)) {
            std::size_t a = add(isharp::census(std::stoi(r->key)), "T7 " + r->key);
            std::size_t b = add(dcover(parse_knot(r->payload.at("knot").get<std::string>())), "T7 " + r->key);
            check_h1(a, r->payload.at("h1"), "T7 " + r->key);
            equal(a, b, "S9", "T7 " + r->key, r->citation);
        }
        for (const Record* r : ds.table(census_triads)) {
            const auto& p = r->payload;
            std::size_t c = add(isharp::census(std::stoi(r->key)), "T8 " + r->key);
            check_h1(c, p.at("h1"), "T8 " + r->key);
            std::size_t a = add_text(p.at("m0").at("manifold").get<std::string>(), "T8 " + r->key);
            std::size_t b = add_text(p.at("m1").at("manifold").get<std::string>(), "T8 " + r->key);
            check_h1(a, p.at("m0").at("h1"), "T8 " + r->key + " m0");
            check_h1(b, p.at("m1").at("h1"), "T8 " + r->key + " m1");
            triangle(a, b, c, "T8 " + r->key, r->citation);
        }
        for (const Record* r : ds.table(triangles)) {
            const auto& p = r->payload;
            std::size_t c = add_text(p.at("target").get<std::string>(), "TRI " + r->key);
            std::size_t a = add_text(p.at("m0").get<std::string>(), "TRI " + r->key);
            std::size_t b = add_text(p.at("m1").get<std::string>(), "TRI " + r->key);
            triangle(a, b, c, "TRI " + r->key, r->citation);
        }
    }

    void check_h1(std::size_t i, const ojson& h1, const std::string& where) {
        if (h1.is_null() || !vars_[i].h1) return;
        if (Int(h1.get<long long>()) != *vars_[i].h1)
            throw IntegrityError(where + ": |H1| " + std::to_string(h1.get<long long>()) + " differs from " +
                                 vars_[i].h1->str() + " for " + vars_[i].key);
    }

    bool sync_knot(std::size_t i) {
        Var& v = vars_[i];
        KnotState& st = knots_.at(v.knot);
        bool changed = false;
        if (!st.cells) {
            auto hi = v.dom.max();
            if (hi && surg_detail::small_enough(nu_bound_from_dim(*hi, v.slope))) {
                Int bound = nu_bound_from_dim(*hi, v.slope);
                st.cells = surg_detail::materialize(st.bundle, bound);
                changed = true;
            } else {
                return restrict(i, surg_detail::interval_image(st.bundle, v.slope, v.bundle), "S1", v.key);
            }
        }
        changed |= restrict(i, surg_detail::cells_image(*st.cells, v.slope, v.bundle), "S1", v.key);
        auto next = surg_detail::cells_restrict(*st.cells, v.slope, v.bundle, v.dom);
        if (next.empty()) throw InconsistencyError(v.key + ": no values of (nu, r0) for " + v.knot + " remain");
        if (next != *st.cells) {
            st.cells = std::move(next);
            changed = true;
        }
        return changed;
    }

    bool apply(const Constraint& c) {
        bool changed = false;
        if (c.kind == Constraint::Kind::equal) {
            std::size_t a = c.vars[0], b = c.vars[1];
            changed |= restrict(a, vars_[b].dom, c.rule, c.detail);
            changed |= restrict(b, vars_[a].dom, c.rule, c.detail);
        } else {
            for (int k = 0; k < 3; ++k) {
                std::size_t t = c.vars[k], x = c.vars[(k + 1) % 3], y = c.vars[(k + 2) % 3];
                changed |= restrict(t, vars_[x].dom.triangle(vars_[y].dom), c.rule, c.detail);
            }
        }
        return changed;
    }

    void solve() {
        for (int round = 0; round < 256; ++round) {
            bool changed = false;
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (!vars_[i].knot.empty()) changed |= sync_knot(i);
            for (const auto& c : constraints_) changed |= apply(c);
            if (!changed) return;
        }
        throw IntegrityError("exact-triangle propagation did not reach a fixed point");
    }

    const Dataset& ds_;
    DeduceOptions opts_;
    std::vector<Var> vars_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, KnotState> knots_;
    std::vector<Constraint> constraints_;
};

// The solved network for a dataset and deduction options, built once.
inline const Network& network(const Dataset& ds, const DeduceOptions& opts = {}) {
    std::string key = "network:" + opts.key();
    if (auto hit = ds.memo_get<Network>(key)) return *hit;
    std::lock_guard<std::recursive_mutex> lock(ds.compute_mutex());
    if (auto hit = ds.memo_get<Network>(key)) return *hit;
    auto net = std::make_shared<const Network>(ds, opts);
    return *ds.memo_put(key, net);
}

// Invariant bundle refined by the surgery dimensions the network pins down.
inline InvariantBundle refined_invariants(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts = {}) {
    InvariantBundle b = deduce(k, ds, opts);
    if (b.nu.is_exact() && b.r0.is_exact() && b.shape != Shape::unknown) return b;
    AtomKey a = atom_key(k, ds);
    const KnotState* st = network(ds, opts).knot(a.key());
    if (!st || !st->cells) return b;
    const auto& cells = *st->cells;
    Int nlo = cells.front().nu, nhi = cells.front().nu;
    DimDomain r = DimDomain::none();
    bool any_v = false, any_w = false;
    for (const auto& c : cells) {
        nlo = std::min(nlo, c.nu);
        nhi = std::max(nhi, c.nu);
        r = r.unite(c.r0);
        (c.shape == Shape::W ? any_w : any_v) = true;
    }
    if (a.mirrored) {
        Int t = -nhi;
        nhi = -nlo;
        nlo = t;
    }
    std::string why = "exact triangles and homeomorphisms among registered manifolds";
    auto narrow = [&](Value& field, const Value& v, const char* what) {
        auto n = field.intersect(v);
        if (!n) throw InconsistencyError(to_string(k) + ": " + what + " from the surgery network contradicts deduction");
        if (!(*n == field)) {
            field = *n;
            b.trace.push_back(TraceEntry{"S5", ds.rule_citation("S5"), std::string(what) + " " + field.to_string() + " from " + why});
        }
    };
    narrow(b.nu, Value::interval(Rational(nlo), Rational(nhi)), "nu");
    std::optional<Rational> rhi;
    if (r.max()) rhi = Rational(*r.max());
    narrow(b.r0, Value::interval(Rational(*r.min()), rhi, true, r.parity()), "r0");
    if (b.shape == Shape::unknown && any_v != any_w) {
        b.shape = any_w ? Shape::W : Shape::V;
        b.trace.push_back(TraceEntry{"S5", ds.rule_citation("S5"), "shape " + to_string(b.shape) + " from " + why});
    }
    if (b.nu.is_exact() && b.r0.is_exact()) {
        b.delta = Value::exact(b.r0.exact_value() - b.nu.exact_value());
    } else {
        b.delta = *b.r0.plus(b.nu.negate()).intersect(Value::interval(Rational(0), std::nullopt, true, 0));
    }
    b.tau = *b.tau.intersect(inv_detail::tau_from_nu(b.nu));
    return b;
}

inline DimResult lens_dim(const Int& p, const Int& q, const Dataset& ds = bundled_dataset()) {
    lens(p, q);
    DimResult r = exact_result(p, p);
    r.trace.push_back(TraceEntry{"S3", ds.rule_citation("S3"), "lens spaces are instanton L-spaces"});
    return r;
}

namespace surg_detail {

inline std::string formula_note(const Slope& s, const Value& nu, const Value& r0) {
    return "q r0 + |p - q nu| with p/q = " + to_string(s) + ", nu = " + nu.to_string() + ", r0 = " + r0.to_string();
}

inline DimResult closed_form(const InvariantBundle& b, const Slope& s, Bundle bundle, const Dataset& ds) {
    DimResult r;
    r.euler = abs_int(s.p);
    r.trace = b.trace;
    Int nu = b.nu.exact_int(), r0 = b.r0.exact_int();
    if (s.p != 0) {
        r.domain = DimDomain::exact(s.q * r0 + abs_int(s.p - s.q * nu));
        r.trace.push_back(TraceEntry{"S1", ds.rule_citation("S1"), formula_note(s, b.nu, b.r0)});
        return r;
    }
    std::string cite = ds.rule_citation("S2");
    if (bundle == Bundle::mu && b.zero_surgery_mu) {
        r.domain = DimDomain::exact(*b.zero_surgery_mu);
        r.trace.push_back(TraceEntry{"S2", cite, "pinned dimension for the mu bundle"});
        return r;
    }
    if (nu != 0) {
        r.domain = DimDomain::exact(r0 + abs_int(nu));
        r.trace.push_back(TraceEntry{"S2", cite, "V-shaped, nu != 0: r0 + |nu|"});
    } else if (b.shape == Shape::W) {
        r.domain = DimDomain::exact(bundle == Bundle::mu ? r0 : Int(r0 + 2));
        r.trace.push_back(TraceEntry{"S2", cite, bundle == Bundle::mu ? "W-shaped: r0" : "W-shaped: r0 + 2"});
    } else if (b.shape == Shape::V) {
        if (bundle == Bundle::trivial) {
            r.domain = DimDomain::exact(r0);
            r.trace.push_back(TraceEntry{"S2", cite, "V-shaped, nu = 0: r0"});
        } else {
            r.domain = DimDomain::euler(0);
            r.trace.push_back(TraceEntry{"S2", cite, "V-shaped with nu = 0: the mu bundle is undetermined"});
        }
    } else if (bundle == Bundle::trivial) {
        r.domain = DimDomain::of({r0, r0 + 2});
        r.trace.push_back(TraceEntry{"S2", cite, "nu = 0 with unknown shape: r0 (V) or r0 + 2 (W)"});
    } else {
        r.domain = DimDomain::euler(0);
        r.trace.push_back(TraceEntry{"S2", cite, "nu = 0 with unknown shape: undetermined for the mu bundle"});
    }
    return r;
}

}  // namespace surg_detail

// dim I#(S^3_{p/q}(K)) from the knot's invariants; slope 1/0 gives S^3.
inline DimResult surgery_dim(const KnotExpr& k, const Slope& s, Bundle bundle, const Dataset& ds,
                             const DeduceOptions& opts = {}) {
    if (bundle == Bundle::mu && !(s.p == 0 && s.q == 1))
        throw DomainError("the mu bundle is only defined for 0-surgery");
    if (s.is_infinite()) {
        DimResult r = exact_result(1, Int(1));
        r.trace.push_back(TraceEntry{"S1", ds.rule_citation("S1"), "slope 1/0 gives S^3"});
        return r;
    }
    InvariantBundle b = deduce(k, ds, opts);
    bool exact = b.nu.is_exact() && b.r0.is_exact();
    if (exact && (s.p != 0 || b.shape != Shape::unknown || bundle == Bundle::trivial || b.zero_surgery_mu))
        return surg_detail::closed_form(b, s, bundle, ds);

    const Network& net = network(ds, opts);
    AtomKey a = atom_key(k, ds);
    Slope rs = a.mirrored ? Slope{-s.p, s.q} : s;
    DimResult r;
    r.euler = abs_int(s.p);
    r.trace = b.trace;
    r.domain = surg_detail::euler_domain(s);
    const KnotState* st = net.knot(a.key());
    KnotState local;
    if (!st) {
        local = make_knot_state(a.rep, ds, opts);
        st = &local;
    }
    if (st->cells) {
        r.domain = r.domain.intersect(surg_detail::cells_image(*st->cells, rs, bundle));
        r.trace.push_back(TraceEntry{"S1", ds.rule_citation("S1"), "evaluated over the possible (nu, r0) of " + a.key()});
    } else {
        r.domain = r.domain.intersect(surg_detail::interval_image(st->bundle, rs, bundle));
    }
    if (const Network::Var* v = net.var(manifold_key(surgery(k, s, bundle), ds))) {
        r.domain = r.domain.intersect(v->dom);
        r.trace.push_back(TraceEntry{"S5", ds.rule_citation("S5"), "constrained by the surgery network as " + v->key});
    }
    if (r.domain.empty()) throw InconsistencyError("no dimension is consistent for " + to_string(surgery(k, s, bundle)));
    if (!r.domain.max() && !b.r0.hi() && !(st->cells && !st->cells->empty() && st->cells->front().r0.max()))
        throw DomainError("r0 of " + to_string(k) + " is unknown, so dim I#(S^3_" + to_string(s) + ") is undetermined");
    return r;
}

inline DimResult surgery_dim(const KnotExpr& k, const Slope& s, const Dataset& ds, const DeduceOptions& opts = {}) {
    return surgery_dim(k, s, Bundle::trivial, ds, opts);
}

inline DimResult zero_surgery_dim(const KnotExpr& k, Bundle bundle, const Dataset& ds, const DeduceOptions& opts = {}) {
    InvariantBundle b = deduce(k, ds, opts);
    if (bundle == Bundle::mu && b.zero_surgery_mu) return surg_detail::closed_form(b, integer_slope(0), bundle, ds);
    if (b.nu.is_exact() && b.r0.is_exact()) return surg_detail::closed_form(b, integer_slope(0), bundle, ds);
    return surgery_dim(k, integer_slope(0), bundle, ds, opts);
}

DimResult dim(const ManifoldDesc& d, const Dataset& ds, const DeduceOptions& opts = {});

inline DimResult branched_cover_dim(const KnotExpr& k, const Dataset& ds, const DeduceOptions& opts = {}) {
    StructuralData s = structural(k, ds);
    DimResult r;
    r.euler = s.determinant;
    r.domain = s.determinant ? DimDomain::euler(*s.determinant) : DimDomain::all();
    if (s.thin_odd_khovanov == Tri::yes && s.determinant) {
        r.domain = DimDomain::exact(*s.determinant);
        r.trace.push_back(TraceEntry{"S4", ds.rule_citation("S4"), "thin odd Khovanov homology: dim = det = " + s.determinant->str()});
        return r;
    }
    for (const auto& f : equivalent_forms(k, ds)) {
        if (f.kind != KnotExpr::Kind::named) continue;
        const Record* rec = ds.find(tables::spectral, f.name);
        if (!rec || rec->payload.at("sigma2").is_null()) continue;
        ManifoldDesc route = parse_manifold(rec->payload.at("sigma2").get<std::string>());
        DimResult sub = dim(route, ds, opts);
        r.domain = r.domain.intersect(sub.domain);
        r.trace = sub.trace;
        r.trace.push_back(TraceEntry{"S6", rec->citation, "branched double cover is " + to_string(route)});
        break;
    }
    if (const Network::Var* v = network(ds, opts).var(manifold_key(dcover(k), ds))) {
        r.domain = r.domain.intersect(v->dom);
    }
    if (r.domain.empty()) throw InconsistencyError("no dimension is consistent for the branched double cover of " + to_string(k));
    return r;
}

inline DimResult census_dim(int i, const Dataset& ds, const DeduceOptions& opts = {}) {
    ManifoldDesc d = census(i);
    const Network::Var* v = network(ds, opts).var(manifold_key(d, ds));
    DimResult r;
    r.euler = h1_order(d, ds);
    if (!v) throw DomainError("census(" + std::to_string(i) + ") has no registered description");
    r.domain = v->dom;
    r.trace.push_back(TraceEntry{"S9", ds.rule_citation("S9"), "routes through the registered descriptions"});
    if (const Record* t2 = ds.find(tables::census, std::to_string(i))) {
        const auto& p = t2->payload;
        DimDomain stored = !p.at("dim").is_null() ? DimDomain::exact(p.at("dim").get<long long>())
                                                   : DimDomain::of([&] {
                                                         std::vector<Int> xs;
                                                         for (const auto& x : p.at("dim_candidates")) xs.emplace_back(x.get<long long>());
                                                         return xs;
                                                     }());
        if (!(stored == r.domain))
            throw IntegrityError("census(" + std::to_string(i) + "): computed " + r.domain.to_string() +
                                 " but T2 stores " + stored.to_string());
    }
    return r;
}

// dC from the exact triangle with dA and dB and |H_1(C)| = h1C.
inline DimResult triad_bounds(const DimResult& a, const DimResult& b, const Int& h1C, const Dataset& ds = bundled_dataset()) {
    DimResult r;
    r.euler = abs_int(h1C);
    r.domain = a.domain.triangle(b.domain).intersect(DimDomain::euler(h1C));
    if (r.domain.empty())
        throw InconsistencyError("no dimension in [|" + a.to_string() + " - " + b.to_string() + "|, " + a.to_string() +
                                 " + " + b.to_string() + "] is compatible with |H1| = " + h1C.str());
    r.trace.push_back(TraceEntry{"S5", ds.rule_citation("S5"), "exact triangle with dims " + a.to_string() + " and " + b.to_string()});
    r.trace.push_back(TraceEntry{"S7", ds.rule_citation("S7"), "d >= |H1| = " + h1C.str() + ", d = |H1| mod 2"});
    return r;
}

inline DimResult dim(const ManifoldDesc& d, const Dataset& ds, const DeduceOptions& opts) {
    using K = ManifoldDesc::Kind;
    switch (d.kind) {
        case K::sphere: return exact_result(1, Int(1));
        case K::surgery: return surgery_dim(d.knot, d.slope, d.bundle, ds, opts);
        case K::lens: return lens_dim(d.p, d.q, ds);
        case K::dcover: return branched_cover_dim(d.knot, ds, opts);
        case K::census: return census_dim(d.index, ds, opts);
        case K::opaque: {
            DimResult r;
            r.euler = d.h1;
            r.domain = DimDomain::euler(d.h1);
            if (const Network::Var* v = network(ds, opts).var(manifold_key(d, ds))) r.domain = r.domain.intersect(v->dom);
            return r;
        }
    }
    return DimResult{};
}

// A homeomorphic re-description of a surgery, with the family it comes from.
struct HomeoIdentity {
    KnotExpr knot;
    Slope slope;
    std::string family;
};

namespace surg_detail {

inline bool is_pm1(const Slope& s) { return s.q == 1 && (s.p == 1 || s.p == -1); }

}  // namespace surg_detail

// Registered homeomorphisms S^3_s(k) = S^3_{s'}(k'): the two-bridge families,
// the pretzel shift and the cable identities.
inline std::vector<HomeoIdentity> homeo_identities(const KnotExpr& k, const Slope& s) {
    std::vector<HomeoIdentity> out;
    if (s.is_infinite()) return out;
    using Kd = KnotExpr::Kind;
    if (k.kind == Kd::two_bridge && s.q == 1) {
        long long a = k.params[0], b = k.params[1];
        if (a % 2 != 0 && b % 2 == 0 && b != 0) {
            long long m = (a - 1) / 2, n = b / 2;
            if (s.p == 4 * n - 1) out.push_back({two_bridge(2, 2 * m + 1), reduce(4 * n - 1, n), "two-bridge 4n-1"});
            if (s.p == 4 * n + 1) out.push_back({two_bridge(-2, 2 * m + 1), reduce(-(4 * n + 1), n), "two-bridge 4n+1"});
        }
        if (a % 2 == 0 && b % 2 == 0 && b != 0 && surg_detail::is_pm1(s)) {
            long long m = a / 2, n = b / 2;
            out.push_back({two_bridge(s.p == 1 ? -2 : 2, 2 * m), reduce(-1, n), "two-bridge +-1"});
        }
    }
    if (k.kind == Kd::pretzel && s.q == 1 && (s.p == 2 || s.p == -2)) {
        const auto& v = k.params;
        if (inv_detail::contains_pair(v, 3, -3)) {
            std::vector<long long> w = v;
            w.erase(std::find(w.begin(), w.end(), 3));
            w.erase(std::find(w.begin(), w.end(), -3));
            long long n = w[0];
            if (s.p == -2) out.push_back({pretzel(n + 3, 3, -3), integer_slope(2), "pretzel shift"});
            else out.push_back({pretzel(n - 3, 3, -3), integer_slope(-2), "pretzel shift"});
        }
    }
    if (k.kind == Kd::cable && s.q == 1) {
        long long p = k.params[0], q = k.params[1];
        Int pq = Int(p) * q;
        for (int e : {1, -1})
            if (s.p == pq + e) out.push_back({k.children[0], reduce(pq + e, Int(q) * q), e > 0 ? "cable pq+1" : "cable pq-1"});
    }
    // S^3_{(pq +- 1)/q^2}(K) = S^3_{pq +- 1}(K_{p,q})
    if (s.q >= 4) {
        Int r = 1;
        while (r * r < s.q) ++r;
        if (r * r == s.q && k.kind != Kd::unknot) {
            long long q = static_cast<long long>(r);
            for (int e : {1, -1}) {
                Int num = s.p - e;
                if (num % q != 0) continue;
                Int p = num / q;
                if (gcd_int(p, Int(q)) != 1) continue;
                out.push_back({cable(static_cast<long long>(p), q, k), integer_slope(s.p), e > 0 ? "cable pq+1" : "cable pq-1"});
            }
        }
    }
    return out;
}

enum class IdentityStatus { equal, compatible, contradiction };

inline std::string to_string(IdentityStatus s) {
    switch (s) {
        case IdentityStatus::equal: return "equal";
        case IdentityStatus::compatible: return "compatible";
        default: return "contradiction";
    }
}

struct IdentityReport {
    IdentityStatus status = IdentityStatus::compatible;
    DimResult lhs;
    DimResult rhs;
    std::string note;

    ojson to_json() const {
        ojson j;
        j["status"] = to_string(status);
        j["lhs"] = lhs.to_json(false);
        j["rhs"] = rhs.to_json(false);
        j["note"] = note;
        return j;
    }
};

// Dimension of a manifold, or only its Euler bounds when the data does not determine it.
inline DimResult dim_or_bounds(const ManifoldDesc& d, const Dataset& ds, const DeduceOptions& opts = {}) {
    try {
        return dim(d, ds, opts);
    } catch (const DomainError&) {
        DimResult r;
        r.euler = h1_order(d, ds);
        r.domain = r.euler ? DimDomain::euler(*r.euler) : DimDomain::all();
        return r;
    }
}

inline IdentityReport verify_identity(const ManifoldDesc& lhs, const ManifoldDesc& rhs, const Dataset& ds,
                                      const DeduceOptions& opts = {}) {
    IdentityReport rep;
    rep.lhs = dim_or_bounds(lhs, ds, opts);
    rep.rhs = dim_or_bounds(rhs, ds, opts);
    auto h1l = h1_order(lhs, ds), h1r = h1_order(rhs, ds);
    if (h1l && h1r && *h1l != *h1r) {
        rep.status = IdentityStatus::contradiction;
        rep.note = "|H1| differs: " + h1l->str() + " vs " + h1r->str();
        return rep;
    }
    DimDomain both = rep.lhs.domain.intersect(rep.rhs.domain);
    if (both.empty()) {
        rep.status = IdentityStatus::contradiction;
        rep.note = "dimensions " + rep.lhs.to_string() + " and " + rep.rhs.to_string() + " are disjoint";
    } else if (rep.lhs.is_exact() && rep.rhs.is_exact()) {
        rep.status = IdentityStatus::equal;
        rep.note = "both " + rep.lhs.to_string();
    } else {
        rep.status = IdentityStatus::compatible;
        rep.note = "overlap " + both.to_string();
    }
    return rep;
}

inline IdentityReport verify_identity(const KnotExpr& k1, const Slope& s1, const KnotExpr& k2, const Slope& s2,
                                      const Dataset& ds, const DeduceOptions& opts = {}) {
    return verify_identity(surgery(k1, s1), surgery(k2, s2), ds, opts);
}

}  // namespace isharp
