#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "slopes.hpp"

namespace isharp {

// Algebraic knot description. Mirrors are pushed down to the atoms:
// named and twist atoms carry a flag, the others absorb it into their
// parameters (T(p,q) -> T(-p,q), P(a,b,c) -> P(-a,-b,-c), TB(a,b) -> TB(-a,-b),
// Cab(p,q;K) -> Cab(-p,q;mK)).
struct KnotExpr {
    enum class Kind { unknot, named, torus, twist, pretzel, two_bridge, cable, sum };

    Kind kind = Kind::unknot;
    std::string name;
    bool mirrored = false;
    std::vector<long long> params;
    std::vector<KnotExpr> children;

    friend bool operator==(const KnotExpr&, const KnotExpr&) = default;

    bool is_atom() const { return kind != Kind::sum && kind != Kind::cable; }
};

namespace knot_detail {

inline long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline bool is_odd(long long x) { return x % 2 != 0; }

}  // namespace knot_detail

inline KnotExpr unknot() { return KnotExpr{}; }

inline KnotExpr named(std::string name, bool mirrored = false) {
    if (name == "U" || name == "0_1") return unknot();
    KnotExpr k;
    k.kind = KnotExpr::Kind::named;
    k.name = std::move(name);
    k.mirrored = mirrored;
    return k;
}

inline KnotExpr torus(long long p, long long q) {
    if (p == 0 || q == 0) {
        if (knot_detail::gcd_ll(p, q) == 1) return unknot();
        throw DomainError("T(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot");
    }
    if (knot_detail::gcd_ll(p, q) != 1)
        throw DomainError("T(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime parameters");
    // T(p,q) = T(q,p) = T(-p,-q); the mirror flips one sign.
    bool negative = (p < 0) != (q < 0);
    long long a = std::min(std::llabs(p), std::llabs(q));
    long long b = std::max(std::llabs(p), std::llabs(q));
    if (a == 1) return unknot();
    KnotExpr k;
    k.kind = KnotExpr::Kind::torus;
    k.params = {negative ? -a : a, b};
    return k;
}

inline KnotExpr twist(long long n, bool mirrored = false) {
    if (n < 1) throw DomainError("Tw(n) needs n >= 1, got " + std::to_string(n));
    KnotExpr k;
    k.kind = KnotExpr::Kind::twist;
    k.params = {n};
    k.mirrored = mirrored;
    return k;
}

inline KnotExpr pretzel(long long a, long long b, long long c) {
    int even = !knot_detail::is_odd(a) + !knot_detail::is_odd(b) + !knot_detail::is_odd(c);
    if (even >= 2)
        throw DomainError("P(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                          ") has two even parameters and is a link");
    // Three-strand pretzels are invariant under all permutations of the tangles.
    std::vector<long long> v{a, b, c};
    std::sort(v.begin(), v.end());
    KnotExpr k;
    k.kind = KnotExpr::Kind::pretzel;
    k.params = v;
    return k;
}

inline KnotExpr two_bridge(long long a, long long b) {
    if (knot_detail::is_odd(a) && knot_detail::is_odd(b))
        throw DomainError("TB(" + std::to_string(a) + "," + std::to_string(b) + ") has both parameters odd");
    KnotExpr k;
    k.kind = KnotExpr::Kind::two_bridge;
    k.params = {a, b};
    return k;
}

inline KnotExpr cable(long long p, long long q, KnotExpr companion) {
    if (q < 2) throw DomainError("Cab(p,q;K) needs q >= 2, got q = " + std::to_string(q));
    if (knot_detail::gcd_ll(p, q) != 1)
        throw DomainError("Cab(" + std::to_string(p) + "," + std::to_string(q) + ";K) needs gcd(p,q) = 1");
    if (companion.kind == KnotExpr::Kind::unknot) return torus(p, q);
    KnotExpr k;
    k.kind = KnotExpr::Kind::cable;
    k.params = {p, q};
    k.children.push_back(std::move(companion));
    return k;
}

inline KnotExpr connected_sum(const std::vector<KnotExpr>& parts) {
    KnotExpr k;
    k.kind = KnotExpr::Kind::sum;
    for (const auto& part : parts) {
        if (part.kind == KnotExpr::Kind::unknot) continue;
        if (part.kind == KnotExpr::Kind::sum) {
            k.children.insert(k.children.end(), part.children.begin(), part.children.end());
        } else {
            k.children.push_back(part);
        }
    }
    if (k.children.empty()) return unknot();
    if (k.children.size() == 1) return k.children.front();
    return k;
}

inline KnotExpr mirror(const KnotExpr& k) {
    using K = KnotExpr::Kind;
    switch (k.kind) {
        case K::unknot: return k;
        case K::named: return named(k.name, !k.mirrored);
        case K::twist: return twist(k.params[0], !k.mirrored);
        case K::torus: return torus(-k.params[0], k.params[1]);
        case K::pretzel: return pretzel(-k.params[0], -k.params[1], -k.params[2]);
        case K::two_bridge: return two_bridge(-k.params[0], -k.params[1]);
        case K::cable: return cable(-k.params[0], k.params[1], mirror(k.children[0]));
        case K::sum: {
            std::vector<KnotExpr> parts;
            for (const auto& c : k.children) parts.push_back(mirror(c));
            return connected_sum(parts);
        }
    }
    return k;
}

// The same knot with any mirror flag on a named or twist atom cleared.
inline KnotExpr unmirrored_atom(const KnotExpr& k) {
    KnotExpr u = k;
    u.mirrored = false;
    return u;
}

inline std::string to_string(const KnotExpr& k) {
    using K = KnotExpr::Kind;
    auto wrap = [&](std::string body, bool m) { return m ? "m(" + body + ")" : body; };
    switch (k.kind) {
        case K::unknot: return "U";
        case K::named: return wrap(k.name, k.mirrored);
        case K::twist: return wrap("Tw(" + std::to_string(k.params[0]) + ")", k.mirrored);
        case K::torus: return "T(" + std::to_string(k.params[0]) + "," + std::to_string(k.params[1]) + ")";
        case K::pretzel:
            return "P(" + std::to_string(k.params[0]) + "," + std::to_string(k.params[1]) + "," +
                   std::to_string(k.params[2]) + ")";
        case K::two_bridge: return "TB(" + std::to_string(k.params[0]) + "," + std::to_string(k.params[1]) + ")";
        case K::cable:
            return "Cab(" + std::to_string(k.params[0]) + "," + std::to_string(k.params[1]) + ";" +
                   to_string(k.children[0]) + ")";
        case K::sum: {
            std::string out;
            for (std::size_t i = 0; i < k.children.size(); ++i) {
                if (i) out += " # ";
                out += to_string(k.children[i]);
            }
            return out;
        }
    }
    return "?";
}

namespace knot_detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    KnotExpr parse() {
        KnotExpr k = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected trailing input");
        return k;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    long long integer() {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (digits == i_) {
            i_ = start;
            fail("expected an integer");
        }
        if (i_ - digits > 15) {
            i_ = start;
            fail("integer parameter too large");
        }
        return std::stoll(std::string(s_.substr(start, i_ - start)));
    }

    template <typename F>
    KnotExpr checked(std::size_t at, F&& make) {
        try {
            return make();
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& e) {
            throw DomainError(std::string(e.what()) + " at position " + std::to_string(at));
        }
    }

    KnotExpr sum() {
        std::vector<KnotExpr> parts{term()};
        while (accept("#")) parts.push_back(term());
        return connected_sum(parts);
    }

    KnotExpr term() {
        skip();
        std::size_t at = i_;
        if (accept("(")) {
            KnotExpr k = sum();
            expect(")");
            return k;
        }
        if (accept("m(")) {
            KnotExpr k = sum();
            expect(")");
            return mirror(k);
        }
        if (accept("Tw(")) {
            long long n = integer();
            expect(")");
            return checked(at, [&] { return twist(n); });
        }
        if (accept("TB(")) {
            long long a = integer();
            expect(",");
            long long b = integer();
            expect(")");
            return checked(at, [&] { return two_bridge(a, b); });
        }
        if (accept("T(")) {
            long long p = integer();
            expect(",");
            long long q = integer();
            expect(")");
            return checked(at, [&] { return torus(p, q); });
        }
        if (accept("P(")) {
            long long a = integer();
            expect(",");
            long long b = integer();
            expect(",");
            long long c = integer();
            expect(")");
            return checked(at, [&] { return pretzel(a, b, c); });
        }
        if (accept("Cab(")) {
            long long p = integer();
            expect(",");
            long long q = integer();
            expect(";");
            KnotExpr companion = sum();
            expect(")");
            return checked(at, [&] { return cable(p, q, companion); });
        }
        return atom_name();
    }

    KnotExpr atom_name() {
        skip();
        std::size_t start = i_;
        auto digit = [&](std::size_t j) { return j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])); };
        if (i_ < s_.size() && s_[i_] == 'U' && !(i_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_ + 1])))) {
            ++i_;
            return unknot();
        }
        if (digit(i_)) {
            while (digit(i_)) ++i_;
            if (i_ >= s_.size() || s_[i_] != '_') fail("expected '_' in knot name");
            ++i_;
            if (!digit(i_)) fail("expected crossing index in knot name");
            while (digit(i_)) ++i_;
            return named(std::string(s_.substr(start, i_ - start)));
        }
        if (i_ < s_.size() && s_[i_] == 'K') {
            ++i_;
            if (!digit(i_)) fail("expected crossing number after 'K'");
            while (digit(i_)) ++i_;
            if (i_ >= s_.size() || (s_[i_] != 'a' && s_[i_] != 'n')) fail("expected 'a' or 'n' in knot name");
            ++i_;
            if (!digit(i_)) fail("expected index in knot name");
            while (digit(i_)) ++i_;
            return named(std::string(s_.substr(start, i_ - start)));
        }
        if (i_ < s_.size() && s_[i_] == 'k') {
            ++i_;
            if (!digit(i_)) fail("expected tetrahedron count after 'k'");
            while (digit(i_)) ++i_;
            if (i_ >= s_.size() || s_[i_] != '_') fail("expected '_' in census knot name");
            ++i_;
            if (!digit(i_)) fail("expected index in census knot name");
            while (digit(i_)) ++i_;
            return named(std::string(s_.substr(start, i_ - start)));
        }
        fail("expected a knot");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace knot_detail

inline KnotExpr parse_knot(std::string_view text) { return knot_detail::Parser(text).parse(); }

// Three-valued flag.
enum class Tri { no, yes, unknown };

inline std::string to_string(Tri t) {
    switch (t) {
        case Tri::no: return "false";
        case Tri::yes: return "true";
        default: return "unknown";
    }
}

// Nonnegative integer that may only be known to lie in [lo, hi] (hi absent = unbounded).
struct Range {
    Int lo{0};
    std::optional<Int> hi;

    static Range exact(const Int& v) { return Range{v, v}; }
    static Range unknown() { return Range{}; }
    bool is_exact() const { return hi && *hi == lo; }
    friend bool operator==(const Range&, const Range&) = default;
};

inline std::string to_string(const Range& r) {
    if (r.is_exact()) return r.lo.str();
    return "[" + r.lo.str() + "," + (r.hi ? r.hi->str() + "]" : std::string("inf)"));
}

// Structural (non-instanton) data. Chirality-dependent flags come in pairs:
// the value for the knot itself and for its mirror.
struct StructuralData {
    Range genus;
    Range slice_genus;
    std::optional<Int> signature;
    std::optional<Int> determinant;
    std::optional<std::vector<Int>> alexander;  // (a0; a1; a2; ...)
    std::optional<Int> max_self_linking;
    Tri alternating = Tri::unknown;
    Tri quasipositive = Tri::unknown;
    Tri mirror_quasipositive = Tri::unknown;
    Tri positive = Tri::unknown;
    Tri mirror_positive = Tri::unknown;
    Tri slice = Tri::unknown;
    Tri amphichiral = Tri::unknown;
    Tri homogeneous = Tri::unknown;
    Tri instanton_lspace = Tri::unknown;
    Tri mirror_instanton_lspace = Tri::unknown;
    Tri thin_odd_khovanov = Tri::unknown;
    std::optional<Int> odd_khovanov_dim;

    friend bool operator==(const StructuralData&, const StructuralData&) = default;
};

inline StructuralData mirror(const StructuralData& s) {
    StructuralData m = s;
    if (s.signature) m.signature = -*s.signature;
    m.max_self_linking.reset();
    std::swap(m.quasipositive, m.mirror_quasipositive);
    std::swap(m.positive, m.mirror_positive);
    std::swap(m.instanton_lspace, m.mirror_instanton_lspace);
    return m;
}

// Delta(-1) for Delta = a0 + sum_i a_i (t^i + t^-i).
inline Int alexander_at_minus_one(const std::vector<Int>& a) {
    Int v = a.empty() ? Int(0) : a[0];
    for (std::size_t i = 1; i < a.size(); ++i) v += 2 * a[i] * ((i % 2) ? -1 : 1);
    return v;
}

// Symmetric product of two Alexander polynomials.
inline std::vector<Int> alexander_product(const std::vector<Int>& x, const std::vector<Int>& y) {
    auto full = [](const std::vector<Int>& a) {
        std::size_t n = a.size() - 1;
        std::vector<Int> f(2 * n + 1);
        for (std::size_t i = 0; i <= n; ++i) f[n + i] = f[n - i] = a[i];
        return f;
    };
    auto fx = full(x), fy = full(y);
    std::vector<Int> prod(fx.size() + fy.size() - 1);
    for (std::size_t i = 0; i < fx.size(); ++i)
        for (std::size_t j = 0; j < fy.size(); ++j) prod[i + j] += fx[i] * fy[j];
    std::size_t mid = prod.size() / 2;
    return std::vector<Int>(prod.begin() + static_cast<std::ptrdiff_t>(mid), prod.end());
}

// Alexander polynomial of T(p,q): (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), symmetrized.
inline std::vector<Int> torus_alexander(long long p, long long q) {
    p = std::llabs(p);
    q = std::llabs(q);
    std::size_t n = static_cast<std::size_t>(p * q);
    // numerator coefficients, degree pq + 1
    std::vector<Int> num(n + 2);
    num[n + 1] += 1;
    num[n] -= 1;
    num[1] -= 1;
    num[0] += 1;
    // divide by (t^p - 1) then by (t^q - 1); both divisions are exact
    auto divide = [](std::vector<Int> f, std::size_t k) {
        std::size_t deg = f.size() - 1;
        std::vector<Int> quot(deg - k + 1);
        for (std::size_t d = deg + 1; d-- > k;) {
            Int c = f[d];
            quot[d - k] = c;
            f[d] -= c;
            f[d - k] += c;
        }
        return quot;
    };
    auto quot = divide(divide(num, static_cast<std::size_t>(p)), static_cast<std::size_t>(q));
    while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
    std::size_t deg = quot.size() - 1;
    std::size_t half = deg / 2;
    std::vector<Int> sym(quot.begin() + static_cast<std::ptrdiff_t>(half), quot.end());
    // normalize the sign so that Delta(1) = 1
    Int at_one = 0;
    for (const auto& c : quot) at_one += c;
    if (at_one < 0)
        for (auto& c : sym) c = -c;
    return sym;
}

// Structural data determined by the family parameters alone (no table data).
inline StructuralData family_structural(const KnotExpr& k) {
    using K = KnotExpr::Kind;
    StructuralData s;
    switch (k.kind) {
        case K::unknot:
            s.genus = s.slice_genus = Range::exact(0);
            s.signature = 0;
            s.determinant = 1;
            s.alexander = std::vector<Int>{1};
            s.max_self_linking = -1;
            s.alternating = s.slice = s.amphichiral = s.homogeneous = Tri::yes;
            s.quasipositive = s.mirror_quasipositive = Tri::yes;
            s.positive = s.mirror_positive = Tri::yes;
            s.instanton_lspace = s.mirror_instanton_lspace = Tri::no;
            s.thin_odd_khovanov = Tri::yes;
            s.odd_khovanov_dim = 1;
            break;
        case K::torus: {
            long long p = k.params[0], q = k.params[1];
            long long a = std::llabs(p);
            Int g = Int((a - 1) * (q - 1) / 2);
            s.genus = s.slice_genus = Range::exact(g);
            if (a % 2 == 0) s.determinant = q;
            else if (q % 2 == 0) s.determinant = a;
            else s.determinant = 1;
            s.alexander = torus_alexander(a, q);
            s.alternating = (a == 2) ? Tri::yes : Tri::no;
            if (a == 2) s.signature = Int(-(q - 1));
            s.slice = s.amphichiral = Tri::no;
            s.homogeneous = Tri::yes;
            s.positive = s.quasipositive = s.instanton_lspace = Tri::yes;
            s.mirror_positive = s.mirror_quasipositive = s.mirror_instanton_lspace = Tri::no;
            if (a == 2) s.thin_odd_khovanov = Tri::yes;
            if (p < 0) s = mirror(s);
            break;
        }
        case K::twist: {
            long long n = k.params[0];
            s.genus = Range::exact(1);
            s.alternating = Tri::yes;
            s.homogeneous = Tri::yes;
            s.thin_odd_khovanov = Tri::yes;
            s.instanton_lspace = Tri::no;
            s.mirror_instanton_lspace = (n == 1) ? Tri::yes : Tri::no;
            s.amphichiral = (n == 2) ? Tri::yes : Tri::no;
            if (n % 2 == 1) {
                long long kk = (n + 1) / 2;
                s.slice_genus = Range::exact(1);
                s.signature = 2;
                s.alexander = std::vector<Int>{Int(-(2 * kk - 1)), Int(kk)};
                s.mirror_positive = s.mirror_quasipositive = Tri::yes;
                s.positive = s.quasipositive = Tri::no;
                s.slice = Tri::no;
            } else {
                long long kk = n / 2;
                s.signature = 0;
                s.alexander = std::vector<Int>{Int(2 * kk + 1), Int(-kk)};
            }
            s.determinant = abs_int(alexander_at_minus_one(*s.alexander));
            if (k.mirrored) s = mirror(s);
            break;
        }
        case K::pretzel: {
            const auto& v = k.params;
            auto has = [&](long long a, long long b) {
                std::vector<long long> w = v;
                auto ia = std::find(w.begin(), w.end(), a);
                if (ia == w.end()) return false;
                w.erase(ia);
                return std::find(w.begin(), w.end(), b) != w.end();
            };
            if (has(3, -3)) {
                s.slice = Tri::yes;
                s.slice_genus = Range::exact(0);
            }
            break;
        }
        case K::cable: {
            StructuralData c = family_structural(k.children[0]);
            if (c.genus.is_exact()) {
                long long p = std::llabs(k.params[0]), q = k.params[1];
                s.genus = Range::exact(Int((p - 1) * (q - 1) / 2) + q * c.genus.lo);
            }
            break;
        }
        default:
            break;
    }
    if (s.slice == Tri::yes) s.slice_genus = Range::exact(0);
    return s;
}

}  // namespace isharp
