#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace isharp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// Floor and ceiling of a/b for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Int parse_int(std::string_view text, std::size_t offset = 0) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParseError("expected an integer", offset + i);
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "' in integer",
                             offset + j);
    }
    std::string digits(text.substr(i));
    Int v(digits);
    return (text[0] == '-') ? Int(-v) : v;
}

// A reduced surgery coefficient p/q. Infinity is the pair (1, 0).
struct Slope {
    Int p{1};
    Int q{0};

    bool is_infinite() const { return q == 0; }
    bool is_integer() const { return q == 1; }
    Rational value() const { return Rational(p, q); }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        Int l = a.p * b.q, r = b.p * a.q;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

inline Slope reduce(Int p, Int q) {
    if (p == 0 && q == 0) throw DomainError("slope 0/0 is undefined");
    if (q == 0) {
        if (abs_int(p) != 1) throw DomainError("infinite slope must be written 1/0, got " + p.str() + "/0");
        return Slope{1, 0};
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    Int g = gcd_int(p, q);
    return Slope{p / g, q / g};
}

inline Slope integer_slope(const Int& n) { return Slope{n, 1}; }
inline Slope infinite_slope() { return Slope{1, 0}; }

inline std::string to_string(const Slope& s) { return s.p.str() + "/" + s.q.str(); }

inline Slope parse_slope(std::string_view text) {
    auto trim = [](std::string_view t, std::size_t& off) {
        while (!t.empty() && t.front() == ' ') { t.remove_prefix(1); ++off; }
        while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
        return t;
    };
    std::size_t off = 0;
    text = trim(text, off);
    if (text == "inf" || text == "infinity" || text == "oo") return infinite_slope();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return integer_slope(parse_int(text, off));
    std::size_t off2 = off + slash + 1;
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    std::size_t o1 = off;
    num = trim(num, o1);
    den = trim(den, off2);
    return reduce(parse_int(num, o1), parse_int(den, off2));
}

// Negative continued fraction [a0, a1, ..., an] = a0 - 1/(a1 - 1/(... - 1/an)).
struct ContinuedFraction {
    std::vector<Int> a;
    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

inline std::string to_string(const ContinuedFraction& cf) {
    std::string out = "[";
    for (std::size_t i = 0; i < cf.a.size(); ++i) {
        if (i) out += ",";
        out += cf.a[i].str();
    }
    return out + "]";
}

inline ContinuedFraction neg_cf(const Slope& s) {
    if (s.is_infinite()) throw DomainError("the slope 1/0 has no continued fraction");
    ContinuedFraction cf;
    Int p = s.p, q = s.q;
    while (true) {
        Int a = ceil_div(p, q);
        cf.a.push_back(a);
        Int rem = a * q - p;
        if (rem == 0) break;
        p = q;
        q = rem;
    }
    return cf;
}

inline void check_cf(const ContinuedFraction& cf) {
    if (cf.a.empty()) throw DomainError("empty continued fraction");
    for (std::size_t i = 1; i < cf.a.size(); ++i)
        if (cf.a[i] < 2) throw DomainError("continued fraction coefficient a" + std::to_string(i) + " < 2");
}

inline Slope eval_cf(const ContinuedFraction& cf) {
    check_cf(cf);
    Int p = cf.a.back(), q = 1;
    for (std::size_t i = cf.a.size() - 1; i-- > 0;) {
        Int np = cf.a[i] * p - q;
        q = p;
        p = np;
    }
    return reduce(p, q);
}

// Pairs (p_i, q_i) for i = -1, 0, ..., n; entry k holds index k - 1.
inline std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction& cf) {
    check_cf(cf);
    std::vector<std::pair<Int, Int>> out;
    out.reserve(cf.a.size() + 1);
    out.emplace_back(1, 0);
    out.emplace_back(cf.a[0], 1);
    for (std::size_t i = 1; i < cf.a.size(); ++i) {
        const auto& prev = out[out.size() - 1];
        const auto& prev2 = out[out.size() - 2];
        Int p = cf.a[i] * prev.first - prev2.first;
        Int q = cf.a[i] * prev.second - prev2.second;
        out.emplace_back(std::move(p), std::move(q));
    }
    return out;
}

enum class SumCase { ab_is_sum, cd_is_sum };

// Slopes a/b < p/q < c/d with (p, q) = (a + c, b + d), and the third slope e/f
// of the exact triangle through a/b and c/d.
struct Triad {
    Slope ab;
    Slope cd;
    Slope ef;
    SumCase sum_case;
};

inline Triad triad(const Slope& s) {
    if (s.is_infinite() || s.is_integer())
        throw DomainError("triad needs a non-integral finite slope, got " + to_string(s));
    auto conv = convergents(neg_cf(s));
    const auto& [pn, qn] = conv[conv.size() - 1];
    const auto& [pm, qm] = conv[conv.size() - 2];
    Int a = pn - pm, b = qn - qm, c = pm, d = qm;
    Triad t;
    t.ab = Slope{a, b};
    t.cd = Slope{c, d};
    if (b == d) {
        t.ef = infinite_slope();
    } else if (b > d) {
        t.ef = Slope{a - c, b - d};
    } else {
        t.ef = Slope{c - a, d - b};
    }
    t.sum_case = (d >= b) ? SumCase::cd_is_sum : SumCase::ab_is_sum;
    return t;
}

}  // namespace isharp
