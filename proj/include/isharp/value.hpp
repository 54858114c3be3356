#pragma once

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>

#include "slopes.hpp"

namespace isharp {

// JSON number when the value fits in 64 bits, otherwise its decimal string.
inline nlohmann::ordered_json json_number(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

// Integers as JSON numbers, fractions as "p/q" strings.
inline nlohmann::ordered_json json_number(const Rational& x) {
    if (denominator(x) == 1) return json_number(numerator(x));
    return isharp::to_string(x);
}

// An exact rational, a closed interval with optional open ends, or unknown.
// Integral values are kept with integer endpoints; parity is the residue mod 2.
class Value {
public:
    Value() = default;

    static Value unknown(bool integral = true) {
        Value v;
        v.integral_ = integral;
        return v;
    }
    static Value exact(const Rational& x) {
        Value v;
        v.lo_ = x;
        v.hi_ = x;
        v.integral_ = denominator(x) == 1;
        if (v.integral_) v.parity_ = parity_of(numerator(x));
        return v;
    }
    static Value exact(const Int& x) { return exact(Rational(x)); }
    static Value exact(long long x) { return exact(Rational(x)); }
    static Value interval(std::optional<Rational> lo, std::optional<Rational> hi, bool integral = true,
                          std::optional<int> parity = std::nullopt) {
        Value v;
        v.lo_ = std::move(lo);
        v.hi_ = std::move(hi);
        v.integral_ = integral;
        v.parity_ = parity;
        if (!v.normalize()) throw InconsistencyError("empty interval " + v.to_string());
        return v;
    }
    static Value at_least(const Rational& lo, bool integral = true) { return interval(lo, std::nullopt, integral); }

    const std::optional<Rational>& lo() const { return lo_; }
    const std::optional<Rational>& hi() const { return hi_; }
    std::optional<int> parity() const { return parity_; }
    bool integral() const { return integral_; }

    bool is_exact() const { return lo_ && hi_ && *lo_ == *hi_; }
    bool is_bounded() const { return lo_ && hi_; }
    bool is_unknown() const { return !lo_ && !hi_ && !parity_; }
    const Rational& exact_value() const {
        if (!is_exact()) throw DomainError("value " + to_string() + " is not exact");
        return *lo_;
    }
    Int exact_int() const {
        const Rational& x = exact_value();
        if (denominator(x) != 1) throw DomainError("value " + to_string() + " is not an integer");
        return numerator(x);
    }

    bool contains(const Rational& x) const {
        if (lo_ && x < *lo_) return false;
        if (hi_ && x > *hi_) return false;
        if (integral_ && denominator(x) != 1) return false;
        if (parity_ && denominator(x) == 1 && parity_of(numerator(x)) != *parity_) return false;
        return true;
    }

    // Values in both; nullopt when the intersection is empty.
    std::optional<Value> intersect(const Value& o) const {
        Value v = *this;
        if (o.lo_ && (!v.lo_ || *o.lo_ > *v.lo_)) v.lo_ = o.lo_;
        if (o.hi_ && (!v.hi_ || *o.hi_ < *v.hi_)) v.hi_ = o.hi_;
        v.integral_ = integral_ || o.integral_;
        if (o.parity_) {
            if (v.parity_ && *v.parity_ != *o.parity_) return std::nullopt;
            v.parity_ = o.parity_;
        }
        if (!v.normalize()) return std::nullopt;
        return v;
    }

    bool subset_of(const Value& o) const {
        if (o.lo_ && (!lo_ || *lo_ < *o.lo_)) return false;
        if (o.hi_ && (!hi_ || *hi_ > *o.hi_)) return false;
        if (o.integral_ && !integral_) return false;
        if (o.parity_ && parity_ != o.parity_) return false;
        return true;
    }

    Value negate() const {
        Value v;
        if (hi_) v.lo_ = -*hi_;
        if (lo_) v.hi_ = -*lo_;
        v.integral_ = integral_;
        v.parity_ = parity_;
        return v;
    }

    Value plus(const Value& o) const {
        Value v;
        if (lo_ && o.lo_) v.lo_ = *lo_ + *o.lo_;
        if (hi_ && o.hi_) v.hi_ = *hi_ + *o.hi_;
        v.integral_ = integral_ && o.integral_;
        if (v.integral_ && parity_ && o.parity_) v.parity_ = (*parity_ + *o.parity_) % 2;
        v.normalize();
        return v;
    }

    Value plus(const Rational& c) const { return plus(exact(c)); }

    Value scaled(const Int& k) const {
        if (k == 0) return exact(0);
        Value v;
        if (k > 0) {
            if (lo_) v.lo_ = *lo_ * k;
            if (hi_) v.hi_ = *hi_ * k;
        } else {
            if (hi_) v.lo_ = *hi_ * k;
            if (lo_) v.hi_ = *lo_ * k;
        }
        v.integral_ = integral_;
        if (integral_ && parity_) v.parity_ = (k % 2 == 0) ? 0 : *parity_;
        v.normalize();
        return v;
    }

    // Widen both ends by r.
    Value widened(const Rational& r) const {
        Value v;
        if (lo_) v.lo_ = *lo_ - r;
        if (hi_) v.hi_ = *hi_ + r;
        v.integral_ = integral_ && denominator(r) == 1;
        if (v.integral_ && parity_ && r == 0) v.parity_ = parity_;
        v.normalize();
        return v;
    }

    std::string to_string() const {
        if (is_exact()) return isharp::to_string(*lo_);
        if (is_unknown()) return "?";
        std::string out;
        if (lo_ || hi_) {
            out = (lo_ ? "[" + isharp::to_string(*lo_) : std::string("(-inf")) + "," +
                  (hi_ ? isharp::to_string(*hi_) + "]" : std::string("inf)"));
        } else {
            out = "(-inf,inf)";
        }
        if (parity_) out += (*parity_ ? " odd" : " even");
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        if (is_exact()) {
            j["exact"] = json_number(*lo_);
            return j;
        }
        j["lo"] = lo_ ? json_number(*lo_) : nlohmann::ordered_json();
        j["hi"] = hi_ ? json_number(*hi_) : nlohmann::ordered_json();
        j["parity"] = parity_ ? nlohmann::ordered_json(*parity_ ? "odd" : "even") : nlohmann::ordered_json();
        return j;
    }

    friend bool operator==(const Value&, const Value&) = default;

private:
    static int parity_of(const Int& x) { return static_cast<int>(abs_int(x) % 2); }

    // Tighten integral endpoints to integers of the right parity; false if empty.
    bool normalize() {
        if (integral_) {
            if (lo_ && denominator(*lo_) != 1) lo_ = Rational(ceil_div(numerator(*lo_), denominator(*lo_)));
            if (hi_ && denominator(*hi_) != 1) hi_ = Rational(floor_div(numerator(*hi_), denominator(*hi_)));
            if (parity_) {
                if (lo_ && parity_of(numerator(*lo_)) != *parity_) lo_ = *lo_ + 1;
                if (hi_ && parity_of(numerator(*hi_)) != *parity_) hi_ = *hi_ - 1;
            }
        } else {
            parity_.reset();
        }
        if (lo_ && hi_) {
            if (*lo_ > *hi_) return false;
            if (*lo_ == *hi_ && integral_ && !parity_) parity_ = parity_of(numerator(*lo_));
        }
        return true;
    }

    std::optional<Rational> lo_;
    std::optional<Rational> hi_;
    bool integral_ = true;
    std::optional<int> parity_;
};

enum class Shape { V, W, unknown };

inline std::string to_string(Shape s) {
    switch (s) {
        case Shape::V: return "V";
        case Shape::W: return "W";
        default: return "unknown";
    }
}

}  // namespace isharp
