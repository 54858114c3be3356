#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "slopes.hpp"

namespace isharp {

// A set of nonnegative integers: either an explicit finite set, or the
// progression {x : lo <= x <= hi, x = residue mod modulus} with hi optional.
class DimDomain {
public:
    static constexpr long long kSetLimit = 4096;

    DimDomain() = default;

    static DimDomain all() { return DimDomain(); }
    static DimDomain none() {
        DimDomain d;
        d.is_set_ = true;
        return d;
    }
    static DimDomain exact(const Int& x) { return of({x}); }
    static DimDomain of(std::vector<Int> xs) {
        DimDomain d;
        d.is_set_ = true;
        for (auto& x : xs)
            if (x >= 0) d.values_.insert(x);
        return d;
    }
    static DimDomain progression(const Int& lo, std::optional<Int> hi, const Int& modulus = 1, const Int& residue = 0) {
        DimDomain d;
        d.lo_ = lo < 0 ? Int(0) : lo;
        d.hi_ = std::move(hi);
        d.mod_ = modulus;
        d.res_ = residue;
        d.normalize();
        return d;
    }
    // d >= |h1| and d = h1 mod 2; for h1 = 0 (infinite homology) d is even.
    static DimDomain euler(const Int& h1) { return progression(abs_int(h1), std::nullopt, 2, abs_int(h1) % 2); }

    bool is_set() const { return is_set_; }
    bool empty() const { return is_set_ && values_.empty(); }
    bool is_exact() const { return is_set_ && values_.size() == 1; }
    bool is_finite() const { return is_set_; }
    const std::set<Int>& values() const { return values_; }
    Int exact_value() const {
        if (!is_exact()) throw DomainError("dimension " + to_string() + " is not exact");
        return *values_.begin();
    }

    std::optional<Int> min() const {
        if (is_set_) return values_.empty() ? std::nullopt : std::optional<Int>(*values_.begin());
        return lo_;
    }
    std::optional<Int> max() const {
        if (is_set_) return values_.empty() ? std::nullopt : std::optional<Int>(*values_.rbegin());
        return hi_;
    }
    const Int& modulus() const { return mod_; }
    const Int& residue() const { return res_; }

    // Parity shared by every element, if any.
    std::optional<int> parity() const {
        if (is_set_) {
            if (values_.empty()) return std::nullopt;
            int p = static_cast<int>(*values_.begin() % 2);
            for (const auto& v : values_)
                if (static_cast<int>(v % 2) != p) return std::nullopt;
            return p;
        }
        if (mod_ % 2 == 0) return static_cast<int>(res_ % 2);
        return std::nullopt;
    }

    bool contains(const Int& x) const {
        if (is_set_) return values_.count(x) > 0;
        if (x < lo_ || (hi_ && x > *hi_)) return false;
        return mod_ == 1 || floor_mod(x - res_, mod_) == 0;
    }

    DimDomain intersect(const DimDomain& o) const {
        if (is_set_ || o.is_set_) {
            const DimDomain& s = is_set_ ? *this : o;
            const DimDomain& t = is_set_ ? o : *this;
            DimDomain d = none();
            for (const auto& v : s.values_)
                if (t.contains(v)) d.values_.insert(v);
            return d;
        }
        auto crt = combine(mod_, res_, o.mod_, o.res_);
        if (!crt) return none();
        std::optional<Int> hi = hi_;
        if (o.hi_ && (!hi || *o.hi_ < *hi)) hi = o.hi_;
        return progression(lo_ > o.lo_ ? lo_ : o.lo_, hi, crt->first, crt->second);
    }

    // Smallest domain of this kind containing both.
    DimDomain unite(const DimDomain& o) const {
        if (empty()) return o;
        if (o.empty()) return *this;
        if (is_set_ && o.is_set_) {
            DimDomain d = *this;
            d.values_.insert(o.values_.begin(), o.values_.end());
            return d;
        }
        auto [alo, ahi, am] = shape_of();
        auto [blo, bhi, bm] = o.shape_of();
        Int m = gcd_int(gcd_int(am, bm), alo - blo);
        std::optional<Int> hi;
        if (ahi && bhi) hi = *ahi > *bhi ? *ahi : *bhi;
        Int lo = alo < blo ? alo : blo;
        if (m == 0) m = 1;
        return progression(lo, hi, m, floor_mod(lo, m));
    }

    // {a x + b : x in this} for a > 0.
    DimDomain affine(const Int& a, const Int& b) const {
        if (is_set_) {
            DimDomain d = none();
            for (const auto& v : values_)
                if (a * v + b >= 0) d.values_.insert(a * v + b);
            return d;
        }
        std::optional<Int> hi;
        if (hi_) hi = a * *hi_ + b;
        return progression(a * lo_ + b, hi, a * mod_, floor_mod(a * res_ + b, a * mod_));
    }

    // {x >= 0 : a x + b in this} for a > 0.
    DimDomain preimage(const Int& a, const Int& b) const {
        if (is_set_) {
            DimDomain d = none();
            for (const auto& v : values_) {
                Int t = v - b;
                if (t >= 0 && t % a == 0) d.values_.insert(t / a);
            }
            return d;
        }
        // a x = res - b (mod m)
        Int g = gcd_int(a, mod_);
        Int rhs = floor_mod(res_ - b, mod_);
        if (rhs % g != 0) return none();
        Int m = mod_ / g;
        Int x0 = m == 1 ? Int(0) : floor_mod((rhs / g) * inverse(floor_mod(a / g, m), m), m);
        Int lo = ceil_div(lo_ - b, a);
        std::optional<Int> hi;
        if (hi_) hi = floor_div(*hi_ - b, a);
        if (hi && *hi < 0) return none();
        return progression(lo < 0 ? Int(0) : lo, hi, m, x0);
    }

    // Every |x - y| .. x + y for x in this, y in o, as a domain.
    DimDomain triangle(const DimDomain& o) const {
        if (empty() || o.empty()) return none();
        if (is_set_ && o.is_set_ && values_.size() * o.values_.size() <= 256) {
            DimDomain d = none();
            bool first = true;
            for (const auto& x : values_)
                for (const auto& y : o.values_) {
                    Int lo = abs_int(x - y), hi = x + y;
                    DimDomain piece = progression(lo, hi);
                    d = first ? piece : d.unite(piece);
                    first = false;
                }
            return d;
        }
        Int lo = 0;
        if (auto omax = o.max()) lo = *min() - *omax > lo ? *min() - *omax : lo;
        if (auto tmax = max()) lo = *o.min() - *tmax > lo ? *o.min() - *tmax : lo;
        std::optional<Int> hi;
        if (max() && o.max()) hi = *max() + *o.max();
        return progression(lo, hi);
    }

    std::string to_string() const {
        if (is_set_) {
            if (values_.size() == 1) return values_.begin()->str();
            std::string out = "{";
            bool first = true;
            for (const auto& v : values_) {
                out += (first ? "" : ",") + v.str();
                first = false;
            }
            return out + "}";
        }
        std::string out = "[" + lo_.str() + "," + (hi_ ? hi_->str() + "]" : std::string("inf)"));
        if (mod_ == 2) out += res_ == 0 ? " even" : " odd";
        else if (mod_ > 2) out += " = " + res_.str() + " mod " + mod_.str();
        return out;
    }

    friend bool operator==(const DimDomain& a, const DimDomain& b) {
        if (a.is_set_ != b.is_set_) return false;
        if (a.is_set_) return a.values_ == b.values_;
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.mod_ == b.mod_ && a.res_ == b.res_;
    }

private:
    static Int floor_mod(const Int& x, const Int& m) {
        Int r = x % m;
        return r < 0 ? Int(r + m) : r;
    }

    // Inverse of a modulo m, for gcd(a, m) = 1.
    static Int inverse(const Int& a, const Int& m) {
        Int r0 = a, r1 = m, s0 = 1, s1 = 0;
        while (r1 != 0) {
            Int q = floor_div(r0, r1);
            Int t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return floor_mod(s0, m);
    }

    // x = r1 mod m1 and x = r2 mod m2.
    static std::optional<std::pair<Int, Int>> combine(const Int& m1, const Int& r1, const Int& m2, const Int& r2) {
        Int g = gcd_int(m1, m2);
        if (floor_mod(r1 - r2, g) != 0) return std::nullopt;
        Int l = m1 / g * m2;
        for (Int x = floor_mod(r1, m1); x < l; x += m1)
            if (floor_mod(x - r2, m2) == 0) return std::make_pair(l, x);
        return std::nullopt;
    }

    std::tuple<Int, std::optional<Int>, Int> shape_of() const {
        if (!is_set_) return {lo_, hi_, mod_};
        Int lo = *values_.begin();
        Int m = 0;
        for (const auto& v : values_) m = gcd_int(m, v - lo);
        return {lo, *values_.rbegin(), m};
    }

    void normalize() {
        if (is_set_) return;
        if (mod_ <= 0) mod_ = 1;
        res_ = floor_mod(res_, mod_);
        Int shift = floor_mod(res_ - lo_, mod_);
        lo_ += shift;
        if (hi_) {
            *hi_ -= floor_mod(*hi_ - res_, mod_);
            if (*hi_ < lo_) {
                *this = none();
                return;
            }
            if ((*hi_ - lo_) / mod_ < kSetLimit) {
                std::set<Int> vs;
                for (Int x = lo_; x <= *hi_; x += mod_) vs.insert(x);
                *this = none();
                values_ = std::move(vs);
            }
        }
    }

    bool is_set_ = false;
    std::set<Int> values_;
    Int lo_ = 0;
    std::optional<Int> hi_;
    Int mod_ = 1;
    Int res_ = 0;
};

}  // namespace isharp
