#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isharp/isharp.hpp"
#include "oracles.hpp"

// Checks behind the acceptance criteria, shared by the acceptance binary and
// the property suites.
namespace criteria {

using namespace isharp;
using ll = long long;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t instances = 0;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

inline const DeduceOptions kDerived{false, false};

inline std::size_t failures_in(const VerifyReport& r, std::string* first = nullptr) {
    std::size_t n = 0;
    for (const auto& row : r.rows)
        if (!row.pass) {
            if (first && n == 0) *first = row.table + " " + row.key + " " + row.field + ": expected " + row.expected + ", got " + row.got + " " + row.note;
            ++n;
        }
    return n;
}

inline Slope random_slope(std::mt19937_64& rng, ll max_p, ll max_q, bool allow_zero = false) {
    std::uniform_int_distribution<ll> P(-max_p, max_p), Q(1, max_q);
    while (true) {
        ll p = P(rng), q = Q(rng);
        if (p == 0 && !allow_zero) continue;
        if (p == 0) return integer_slope(0);
        return reduce(p, q);
    }
}

inline Slope random_fraction(std::mt19937_64& rng, ll max_p, ll max_q) {
    while (true) {
        Slope s = random_slope(rng, max_p, max_q);
        if (!s.is_integer()) return s;
    }
}

// Table knots, their mirrors and family members with exact invariants.
inline std::vector<std::pair<KnotExpr, InvariantBundle>> exact_pool(const Dataset& ds) {
    std::vector<std::pair<KnotExpr, InvariantBundle>> pool;
    auto add = [&](const KnotExpr& k) {
        InvariantBundle b = refined_invariants(k, ds, kDerived);
        if (b.nu.is_exact() && b.r0.is_exact()) pool.emplace_back(k, b);
    };
    add(unknot());
    for (const char* t : {tables::nu_r0, tables::nu_tau, tables::integer_surgeries})
        for (const Record* r : ds.table(t)) {
            KnotExpr k = knot_of_key(r->key);
            add(k);
            add(mirror(k));
        }
    for (ll n = 1; n <= 12; ++n) {
        add(twist(n));
        add(pretzel(n, 3, -3));
        add(pretzel(2 * n - 1, 3, 2));
        add(torus(2, 2 * n + 1));
    }
    add(parse_knot("Cab(3,2;m(3_1))"));
    add(parse_knot("3_1 # 5_1"));
    return pool;
}

inline Outcome criterion1(const Dataset& ds) {
    Outcome o;
    for (const char* t : {tables::nu_r0, tables::nu_tau, tables::integer_surgeries}) {
        VerifyReport r = verify_table(t, ds);
        std::string first;
        o.instances += r.rows.size();
        if (failures_in(r, &first)) o.fail(first);
    }
    const std::vector<std::pair<std::pair<const char*, ll>, ll>> dims = {
        {{"6_2", -9}, 13}, {{"7_3", 7}, 11},  {{"7_4", 1}, 7},   {{"8_2", -13}, 19}, {{"8_3", 1}, 9},
        {{"8_4", -7}, 15}, {{"6_3", -1}, 7}, {{"8_6", -1}, 11}, {{"8_8", -1}, 13}};
    std::string got;
    for (const auto& [ks, d] : dims) {
        DimResult r = surgery_dim(parse_knot(ks.first), integer_slope(ks.second), ds, kDerived);
        got += std::string(got.empty() ? "" : " ") + ks.first + "=" + r.to_string();
        if (!r.is_exact() || r.value() != d) o.fail(std::string("S3_n(") + ks.first + ") = " + r.to_string());
    }
    std::vector<std::string> open;
    for (const Record* r : ds.table(tables::nu_tau))
        if (!refined_invariants(knot_of_key(r->key), ds, kDerived).nu.is_exact()) open.push_back(r->key);
    if (open != std::vector<std::string>{"7_7", "8_13"}) o.fail("nu left open for an unexpected set of knots");
    if (o.pass) o.detail = std::to_string(o.instances) + " cells of T1/T3/T4 re-derived; " + got + "; nu open only for 7_7, 8_13";
    return o;
}

inline Outcome criterion2(const Dataset& ds) {
    Outcome o;
    std::vector<std::string> counts;
    for (const char* t : {tables::census, tables::census_surgeries, tables::census_covers, tables::census_triads}) {
        VerifyReport r = verify_table(t, ds);
        std::string first;
        if (failures_in(r, &first)) o.fail(first);
        counts.push_back(std::string(t) + ":" + std::to_string(ds.table(t).size()));
    }
    if (ds.table(tables::census).size() != 20 || ds.table(tables::census_surgeries).size() != 12 ||
        ds.table(tables::census_covers).size() != 8 || ds.table(tables::census_triads).size() != 3)
        o.fail("unexpected census row counts");
    DimResult seven = census_dim(7, ds, kDerived);
    if (!(seven.domain == DimDomain::of({10, 12}))) o.fail("census 7 gives " + seven.to_string());
    if (o.pass) o.detail = "rows " + counts[0] + " " + counts[1] + " " + counts[2] + " " + counts[3] + "; census 7 = " + seven.to_string();
    return o;
}

inline Outcome criterion3(const Dataset& ds, ll n_max = 100, int slopes = 200) {
    Outcome o;
    std::mt19937_64 rng(20241);
    auto check = [&](const KnotExpr& k, ll expected, const Slope& s) {
        ++o.instances;
        DimResult r = surgery_dim(k, s, ds, kDerived);
        if (!r.is_exact() || r.value() != expected)
            o.fail("S3_" + to_string(s) + "(" + to_string(k) + ") = " + r.to_string() + ", expected " + std::to_string(expected));
    };
    for (ll n = 1; n <= n_max; ++n) {
        KnotExpr tw = twist(n), p33 = pretzel(n, 3, -3), p32 = pretzel(2 * n - 1, 3, 2), ls = torus(2, 2 * n + 1);
        for (int i = 0; i < slopes; ++i) {
            Slope s = random_slope(rng, 500, 60);
            ll p = static_cast<ll>(s.p), q = static_cast<ll>(s.q);
            check(tw, oracle::twist_dim(n, p, q), s);
            check(p33, oracle::pretzel33_dim(n, p, q), s);
            check(p32, oracle::pretzel32_dim(n, p, q), s);
            check(ls, oracle::lspace_dim(n, p, q), s);
        }
    }
    if (o.pass) o.detail = std::to_string(o.instances) + " surgeries on Tw(n), P(n,3,-3), P(2n-1,3,2), T(2,2n+1) for n <= " + std::to_string(n_max);
    return o;
}

inline Outcome criterion4(const Dataset& ds) {
    Outcome o;
    VerifyReport r = verify_table(tables::spectral, ds);
    std::string first;
    if (failures_in(r, &first)) o.fail(first);
    const std::vector<std::string> order = {"10_124", "10_139", "10_145", "10_152", "10_153", "10_154", "10_161"};
    const std::vector<std::string> want = {"1", "5", "5", "unknown", "5", "{13,15}", "7"};
    std::string got, strict;
    for (std::size_t i = 0; i < order.size(); ++i) {
        DimResult d = branched_cover_dim(parse_knot(order[i]), ds, kDerived);
        std::string s = d.domain.is_finite() ? d.to_string() : "unknown";
        got += (i ? "," : "") + s;
        if (s != want[i]) o.fail(order[i] + " gives " + s);
    }
    for (const auto& row : r.rows)
        if (row.field == "Kh' > dim" && row.got != "strict") strict += " " + row.key + ":" + row.got;
    if (strict != " 10_152:unknown 10_154:possible-only") o.fail("strictness exceptions were" + strict);
    if (o.pass) o.detail = "dims (" + got + "); strict except" + strict;
    return o;
}

inline Outcome triad_identities(std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < n; ++i) {
        Slope s = random_fraction(rng, 10'000'000, 1'000'000);
        Triad t = triad(s);
        ++o.instances;
        const Int &p = s.p, &q = s.q, &a = t.ab.p, &b = t.ab.q, &c = t.cd.p, &d = t.cd.q, &e = t.ef.p, &f = t.ef.q;
        bool ok = p == a + c && q == b + d && b > 0 && d > 0 && f >= 0 && (f != 0 || e == 1) && b * c - a * d == 1 &&
                  p * b - q * a == 1 && q * c - p * d == 1;
        Int lo = floor_div(p, q), hi = ceil_div(p, q);
        ok = ok && a >= lo * b && a <= hi * b && c >= lo * d && c <= hi * d;
        if (!(b == 1 && d == 1)) ok = ok && f > 0 && e >= lo * f && e <= hi * f;
        if (!ok) o.fail("triad identities fail at " + to_string(s));
        if (i % 100 == 0 && q <= 5000) {
            auto t2 = oracle::triad(static_cast<ll>(p), static_cast<ll>(q));
            if (Int(t2.a) != a || Int(t2.b) != b || Int(t2.c) != c || Int(t2.d) != d || Int(t2.e) != e || Int(t2.f) != f)
                o.fail("triad differs from the search oracle at " + to_string(s));
        }
    }
    return o;
}

inline Outcome cf_round_trip(std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<ll> A0(-1000, 1000), Ai(2, 40), Len(1, 12);
    for (std::size_t i = 0; i < n; ++i) {
        ++o.instances;
        Slope s = random_slope(rng, 1'000'000, 1'000'000, true);
        if (eval_cf(neg_cf(s)) != s) o.fail("eval(neg_cf(s)) != s at " + to_string(s));
        ContinuedFraction cf;
        cf.a.push_back(A0(rng));
        for (ll k = 1, len = Len(rng); k < len; ++k) cf.a.push_back(Ai(rng));
        Slope v = eval_cf(cf);
        if (!(neg_cf(v) == cf)) o.fail("neg_cf(eval(cf)) != cf at " + to_string(cf));
        if (i % 10 == 0) {
            std::vector<ll> a;
            for (const auto& x : cf.a) a.push_back(static_cast<ll>(x));
            auto [pp, qq] = oracle::eval_neg_cf(a);
            if (pp != v.p || qq != v.q) o.fail("eval_cf differs from the folding oracle at " + to_string(cf));
        }
    }
    return o;
}

inline Outcome convergent_determinants(std::size_t n) {
    Outcome o;
    std::mt19937_64 rng(13);
    for (std::size_t i = 0; i < n; ++i) {
        ++o.instances;
        Slope s = random_slope(rng, 1'000'000, 1'000'000, true);
        auto cs = convergents(neg_cf(s));
        for (std::size_t k = 1; k < cs.size(); ++k) {
            if (cs[k].second * cs[k - 1].first - cs[k].first * cs[k - 1].second != 1) o.fail("determinant != 1 at " + to_string(s));
            if (cs[k].second <= cs[k - 1].second || cs[k].second <= 0) o.fail("q_i not increasing at " + to_string(s));
        }
        if (cs.back() != std::make_pair(s.p, s.q)) o.fail("last convergent differs at " + to_string(s));
    }
    return o;
}

inline Outcome dim_parity(const Dataset& ds, std::size_t n) {
    Outcome o;
    auto pool = exact_pool(ds);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        ++o.instances;
        const auto& [k, b] = pool[pick(rng)];
        Slope s = random_slope(rng, 2000, 200, true);
        DimResult r = surgery_dim(k, s, ds, kDerived);
        Int h = abs_int(s.p);
        if (r.domain.empty() || *r.domain.min() < h || r.domain.parity() != std::optional<int>(static_cast<int>(h % 2)))
            o.fail("parity or Euler bound fails for S3_" + to_string(s) + "(" + to_string(k) + ") = " + r.to_string());
    }
    return o;
}

inline Outcome mirror_symmetry(const Dataset& ds, std::size_t n) {
    Outcome o;
    auto pool = exact_pool(ds);
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        ++o.instances;
        const KnotExpr& k = pool[pick(rng)].first;
        Slope s = random_slope(rng, 2000, 200, true);
        Slope ms = s.p == 0 ? s : Slope{-s.p, s.q};
        DimResult a = surgery_dim(k, s, ds, kDerived), b = surgery_dim(mirror(k), ms, ds, kDerived);
        if (!(a.domain == b.domain)) o.fail("S3_" + to_string(s) + "(" + to_string(k) + ") differs from its mirror");
    }
    return o;
}

inline Outcome triad_splitting(const Dataset& ds, std::size_t n) {
    Outcome o;
    auto pool = exact_pool(ds);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    while (o.instances < n) {
        Slope s = random_fraction(rng, 5000, 500);
        if (abs_int(s.p) == 1) continue;
        ++o.instances;
        const KnotExpr& k = pool[pick(rng)].first;
        Triad t = triad(s);
        DimResult d = surgery_dim(k, s, ds, kDerived), a = surgery_dim(k, t.ab, ds, kDerived), c = surgery_dim(k, t.cd, ds, kDerived);
        if (d.value() != a.value() + c.value())
            o.fail("dim(" + to_string(s) + ") != dim(" + to_string(t.ab) + ") + dim(" + to_string(t.cd) + ") for " + to_string(k));
    }
    return o;
}

inline KnotExpr random_knot(std::mt19937_64& rng, const std::vector<KnotExpr>& named_pool, int depth = 0) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 8);
    std::uniform_int_distribution<ll> small(1, 60);
    std::uniform_int_distribution<ll> torus_param(2, 16);
    std::uniform_int_distribution<std::size_t> pick(0, named_pool.size() - 1);
    std::bernoulli_distribution flip(0.5);
    KnotExpr k;
    switch (kind(rng)) {
        case 0: k = named_pool[pick(rng)]; break;
        case 1: {
            ll a = torus_param(rng), b = torus_param(rng);
            while (std::gcd(a, b) != 1) ++b;
            k = torus(flip(rng) ? a : -a, b);
            break;
        }
        case 2: k = twist(small(rng)); break;
        case 3: k = pretzel(small(rng) - 30, 3, -3); break;
        case 4: k = pretzel(2 * small(rng) - 1, 3, 2); break;
        case 5: k = unknot(); break;
        case 6: k = named_pool[pick(rng)]; break;
        case 7: {
            ll q = small(rng) % 5 + 2, p = small(rng) * (flip(rng) ? 1 : -1);
            while (std::gcd(p, q) != 1) ++p;
            k = cable(p, q, random_knot(rng, named_pool, depth + 1));
            break;
        }
        default: k = connected_sum({random_knot(rng, named_pool, depth + 1), random_knot(rng, named_pool, depth + 1)}); break;
    }
    return flip(rng) ? mirror(k) : k;
}

inline Outcome bundle_bounds(const Dataset& ds, std::size_t n) {
    Outcome o;
    std::vector<KnotExpr> named_pool;
    for (const Record* r : ds.table(tables::knots)) named_pool.push_back(parse_knot(r->key));
    std::mt19937_64 rng(29);
    std::size_t exact = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ++o.instances;
        KnotExpr k = random_knot(rng, named_pool);
        InvariantBundle b = deduce(k, ds);
        if (b.nu.is_exact() && b.tau.is_exact()) {
            ++exact;
            Rational g = 2 * b.tau.exact_value() - b.nu.exact_value();
            if (g > 1 || g < -1) o.fail("|2tau - nu| > 1 for " + to_string(k));
        }
        if (b.nu.is_exact() && b.r0.is_exact()) {
            Int nu = b.nu.exact_int(), r0 = b.r0.exact_int();
            if (r0 < abs_int(nu)) o.fail("r0 < |nu| for " + to_string(k));
            if (!b.delta.is_exact() || b.delta.exact_int() != r0 - nu) o.fail("delta != r0 - nu for " + to_string(k));
            else if (b.delta.exact_int() < 0 || b.delta.exact_int() % 2 != 0) o.fail("delta odd or negative for " + to_string(k));
        }
        if (b.delta.lo() && *b.delta.lo() < 0) o.fail("delta may be negative for " + to_string(k));
    }
    o.detail = std::to_string(exact) + " exact bundles among " + std::to_string(n) + " random knots";
    return o;
}

inline Outcome criterion5(const Dataset& ds, std::size_t n = 100'000) {
    Outcome o;
    std::vector<std::pair<const char*, Outcome>> parts = {
        {"triad identities", triad_identities(n)},
        {"CF round trip", cf_round_trip(n)},
        {"convergent determinants", convergent_determinants(n)},
        {"dim parity", dim_parity(ds, n)},
        {"mirror symmetry", mirror_symmetry(ds, n)},
        {"triad splitting", triad_splitting(ds, n)},
        {"bundle bounds", bundle_bounds(ds, n)},
    };
    std::string summary;
    for (const auto& [name, part] : parts) {
        o.instances += part.instances;
        if (!part.pass) o.fail(std::string(name) + ": " + part.detail);
        summary += std::string(summary.empty() ? "" : ", ") + name + " " + std::to_string(part.instances);
    }
    if (o.pass) o.detail = summary;
    return o;
}

inline Outcome criterion6(const Dataset& ds, ll limit = 50) {
    Outcome o;
    VerifyReport r = verify_identities(ds, limit);
    r.append(verify_table(tables::identities, ds));
    std::string first;
    if (failures_in(r, &first)) o.fail(first);
    std::string summary;
    for (const auto& row : r.rows)
        if (row.table == "identities" && row.key.rfind("n=", 0) != 0) summary += std::string(summary.empty() ? "" : "; ") + row.key + ": " + row.got;
    if (o.pass) o.detail = summary + "; twist chain n <= " + std::to_string(limit) + " and all IDENT rows equal";
    return o;
}

inline Outcome criterion7(const Dataset& ds, std::size_t n = 1000) {
    Outcome o;
    auto pool = exact_pool(ds);
    std::mt19937_64 rng(31);
    for (const auto& [k, b] : pool) {
        ll nu = static_cast<ll>(b.nu.exact_int()), r0 = static_cast<ll>(b.r0.exact_int());
        for (std::size_t i = 0; i < n; ++i) {
            ++o.instances;
            Slope s = random_slope(rng, 400, 50);
            ll p = static_cast<ll>(s.p), q = static_cast<ll>(s.q);
            ll want = oracle::split_dim(p, q, nu, r0);
            DimResult r = surgery_dim(k, s, ds, kDerived);
            if (!r.is_exact() || r.value() != want)
                o.fail("S3_" + to_string(s) + "(" + to_string(k) + ") = " + r.to_string() + ", splitting gives " + std::to_string(want));
        }
    }
    if (o.pass) o.detail = std::to_string(pool.size()) + " knots x " + std::to_string(n) + " slopes with q <= 50";
    return o;
}

}  // namespace criteria
