#include <catch_amalgamated.hpp>

#include <isharp/isharp.hpp>

#include "oracles.hpp"

using namespace isharp;

namespace {

Slope S(long long p, long long q) { return Slope{p, q}; }

ContinuedFraction cf(std::initializer_list<long long> xs) {
    ContinuedFraction c;
    for (long long x : xs) c.a.push_back(x);
    return c;
}

std::vector<std::pair<Int, Int>> pairs(std::initializer_list<std::pair<long long, long long>> xs) {
    std::vector<std::pair<Int, Int>> out;
    for (auto [a, b] : xs) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST_CASE("reduce normalizes sign and common factors") {
    CHECK(reduce(10, 4) == S(5, 2));
    CHECK(reduce(3, -1) == S(-3, 1));
    CHECK(reduce(-6, -4) == S(3, 2));
    CHECK(reduce(0, 7) == S(0, 1));
    CHECK(reduce(-1, 0) == infinite_slope());
    CHECK_THROWS_AS(reduce(-2, 0), DomainError);
    CHECK_THROWS_AS(reduce(0, 0), DomainError);
}

TEST_CASE("parse_slope accepts integers and fractions") {
    CHECK(parse_slope("35/2") == S(35, 2));
    CHECK(parse_slope("-9") == S(-9, 1));
    CHECK(parse_slope(" 6/-4 ") == S(-3, 2));
    CHECK(parse_slope("1/0") == infinite_slope());
    CHECK_THROWS_AS(parse_slope("abc"), ParseError);
    CHECK_THROWS_AS(parse_slope("1/"), ParseError);
    CHECK_THROWS_AS(parse_slope("2/0"), DomainError);
}

TEST_CASE("negative continued fractions") {
    CHECK(neg_cf(S(1, 3)) == cf({1, 2, 2}));
    CHECK(neg_cf(S(-1, 3)) == cf({0, 3}));
    CHECK(neg_cf(S(7, 1)) == cf({7}));
    CHECK(to_string(neg_cf(S(35, 2))) == "[18,2]");
    CHECK_THROWS_AS(neg_cf(infinite_slope()), DomainError);
}

TEST_CASE("eval_cf inverts neg_cf and rejects coefficients below 2") {
    CHECK(eval_cf(cf({18, 2})) == S(35, 2));
    CHECK(eval_cf(cf({3, 2})) == S(5, 2));
    CHECK(eval_cf(cf({1, 2, 2})) == S(1, 3));
    CHECK_THROWS_AS(eval_cf(cf({3, 1})), DomainError);
    CHECK_THROWS_AS(eval_cf(ContinuedFraction{}), DomainError);
}

TEST_CASE("convergents start at 1/0") {
    CHECK(convergents(cf({1, 2, 2})) == pairs({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    CHECK(convergents(cf({0, 3})) == pairs({{1, 0}, {0, 1}, {-1, 3}}));
    CHECK(convergents(cf({5})) == pairs({{1, 0}, {5, 1}}));
}

TEST_CASE("triads of small slopes") {
    Triad t = triad(S(5, 2));
    CHECK(t.ab == S(2, 1));
    CHECK(t.cd == S(3, 1));
    CHECK(t.ef == infinite_slope());

    t = triad(S(1, 3));
    CHECK(t.ab == S(0, 1));
    CHECK(t.cd == S(1, 2));
    CHECK(t.ef == S(1, 1));
    CHECK(t.sum_case == SumCase::cd_is_sum);

    t = triad(S(-1, 2));
    CHECK(t.ab == S(-1, 1));
    CHECK(t.cd == S(0, 1));
    CHECK(t.ef == infinite_slope());

    CHECK_THROWS_AS(triad(S(3, 1)), DomainError);
    CHECK_THROWS_AS(triad(infinite_slope()), DomainError);
}

TEST_CASE("triads agree with the Farey-neighbour search") {
    for (long long q = 2; q <= 40; ++q)
        for (long long p = -60; p <= 60; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Triad t = triad(S(p, q));
            oracle::Triad o = oracle::triad(p, q);
            INFO(p << "/" << q);
            CHECK(t.ab == reduce(o.a, o.b));
            CHECK(t.cd == reduce(o.c, o.d));
            CHECK(t.ef == reduce(o.e, o.f));
        }
}

TEST_CASE("eval_cf matches exact rational folding") {
    for (long long q = 1; q <= 30; ++q)
        for (long long p = -50; p <= 50; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ContinuedFraction c = neg_cf(S(p, q));
            std::vector<long long> a;
            for (const auto& x : c.a) a.push_back(static_cast<long long>(x));
            auto [num, den] = oracle::eval_neg_cf(a);
            CHECK(num == p);
            CHECK(den == q);
        }
}
