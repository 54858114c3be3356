#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

// Reference implementations written directly from the definitions, without
// the library's algorithms.
namespace oracle {

using ll = long long;
using big = boost::multiprecision::cpp_int;
using rat = boost::rational<big>;

inline ll floor_div(ll a, ll b) {
    ll q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline ll ceil_div(ll a, ll b) { return -floor_div(-a, b); }

// a0 - 1/(a1 - 1/(... - 1/an)) by exact rational folding from the right.
inline std::pair<big, big> eval_neg_cf(const std::vector<ll>& a) {
    rat x(a.back());
    for (std::size_t i = a.size() - 1; i-- > 0;) x = rat(a[i]) - rat(1) / x;
    return {x.numerator(), x.denominator()};
}

struct Triad {
    ll a, b, c, d, e, f;
};

// The unique Farey neighbours a/b < p/q < c/d with b + d = q, by search over b.
inline Triad triad(ll p, ll q) {
    if (q < 2) throw std::invalid_argument("triad needs a non-integral slope");
    for (ll b = 1; b < q; ++b) {
        if (((p * b - 1) % q + q) % q != 0) continue;
        ll a = (p * b - 1) / q;
        ll c = p - a, d = q - b;
        Triad t{a, b, c, d, 0, 0};
        if (b == d) {
            t.e = 1;
            t.f = 0;
        } else if (b > d) {
            t.e = a - c;
            t.f = b - d;
        } else {
            t.e = c - a;
            t.f = d - b;
        }
        return t;
    }
    throw std::logic_error("no triad found");
}

// q r0 + |p - q nu|.
inline ll closed_form(ll p, ll q, ll nu, ll r0) { return q * r0 + std::llabs(p - q * nu); }

// dim I#(S^3_{p/q}(K)) by splitting p/q along triads down to integer slopes n,
// where dim = r0 + |n - nu|.
inline ll split_dim(ll p, ll q, ll nu, ll r0) {
    if (q == 1) return r0 + std::llabs(p - nu);
    Triad t = triad(p, q);
    return split_dim(t.a, t.b, nu, r0) + split_dim(t.c, t.d, nu, r0);
}

// Twist knot Tw(n): r0 = n, nu = -1 for odd n and 0 for even n.
inline ll twist_dim(ll n, ll p, ll q) { return q * n + std::llabs(p + (n % 2 ? q : 0)); }

// P(n,3,-3): nu = 0, r0 = 4.
inline ll pretzel33_dim(ll, ll p, ll q) { return 4 * q + std::llabs(p); }

// P(2n-1,3,2): nu = 2n - 1, r0 = 6n - 1.
inline ll pretzel32_dim(ll n, ll p, ll q) { return q * (6 * n - 1) + std::llabs(p - q * (2 * n - 1)); }

// Instanton L-space knot of genus g: nu = r0 = 2g - 1.
inline ll lspace_dim(ll g, ll p, ll q) { return q * (2 * g - 1) + std::llabs(p - q * (2 * g - 1)); }

}  // namespace oracle
