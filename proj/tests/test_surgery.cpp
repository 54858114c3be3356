#include <catch_amalgamated.hpp>

#include <isharp/isharp.hpp>

#include "oracles.hpp"

using namespace isharp;

namespace {

const Dataset& ds() { return bundled_dataset(); }

Slope S(long long p, long long q = 1) { return reduce(p, q); }

DimResult surg(const char* k, long long p, long long q = 1) { return surgery_dim(parse_knot(k), S(p, q), ds()); }

std::set<Int> values(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

bool same_manifold(const HomeoIdentity& h, const char* k, const Slope& s) { return h.knot == parse_knot(k) && h.slope == s; }

}  // namespace

TEST_CASE("surgery dimensions from nu and r0") {
    CHECK(surg("3_1", -5).value() == 5);
    CHECK(surg("P(-2,3,7)", 35, 2).value() == 35);
    CHECK(surg("5_1", -3).value() == 3);
    CHECK(surg("6_1", 1).value() == 5);
    CHECK(surg("U", 7, 3).value() == 7);
    CHECK(surg("8_19", 0).value() == 10);
}

TEST_CASE("graded dimensions split by the Euler characteristic") {
    DimResult r = surg("6_2", -9);
    REQUIRE(r.is_exact());
    CHECK(r.value() == 13);
    CHECK(r.graded() == std::make_pair(Int(11), Int(2)));
}

TEST_CASE("surgery_dim matches the closed form on exact knots") {
    for (const char* k : {"3_1", "m(5_2)", "8_19", "Tw(6)", "P(2,3,-3)", "T(2,9)"}) {
        InvariantBundle b = deduce(parse_knot(k), ds());
        long long nu = static_cast<long long>(b.nu.exact_int()), r0 = static_cast<long long>(b.r0.exact_int());
        for (long long q = 1; q <= 7; ++q)
            for (long long p = -30; p <= 30; ++p) {
                if (std::gcd(p, q) != 1 || p == 0) continue;
                INFO(k << " at " << p << "/" << q);
                CHECK(surg(k, p, q).value() == oracle::closed_form(p, q, nu, r0));
            }
    }
}

TEST_CASE("zero surgery with and without the mu bundle") {
    KnotExpr k61 = parse_knot("6_1"), k41 = parse_knot("4_1");
    CHECK(zero_surgery_dim(k61, Bundle::trivial, ds()).value() == 6);
    CHECK(zero_surgery_dim(k61, Bundle::mu, ds()).value() == 4);
    CHECK(zero_surgery_dim(k41, Bundle::mu, ds()).value() == 2);
    DimResult t = zero_surgery_dim(k41, Bundle::trivial, ds());
    CHECK(t.kind() == "candidates");
    CHECK(t.domain.values() == values({2, 4}));
}

TEST_CASE("the mu bundle needs slope 0") {
    CHECK_THROWS_AS(surgery(parse_knot("3_1"), S(1), Bundle::mu), DomainError);
}

TEST_CASE("lens spaces") {
    CHECK(lens_dim(9, 2).value() == 9);
    CHECK(lens_dim(5, 1).value() == 5);
    DimResult l21 = lens_dim(2, 1);
    CHECK(l21.value() == 2);
    CHECK(l21.graded() == std::make_pair(Int(2), Int(0)));
    CHECK_THROWS_AS(lens_dim(4, 2), DomainError);
    CHECK_THROWS_AS(lens_dim(3, 3), DomainError);
}

TEST_CASE("branched double covers") {
    CHECK(branched_cover_dim(parse_knot("9_49"), ds()).value() == 25);
    CHECK(branched_cover_dim(parse_knot("10_139"), ds()).value() == 5);
    CHECK(branched_cover_dim(parse_knot("10_154"), ds()).domain.values() == values({13, 15}));
}

TEST_CASE("census manifolds") {
    CHECK(census_dim(5, ds()).value() == 5);
    CHECK(census_dim(7, ds()).domain.values() == values({10, 12}));
    CHECK(census_dim(0, ds()).value() == 25);
    CHECK_THROWS_AS(census(20), DomainError);
}

TEST_CASE("exact-triangle bounds") {
    auto ex = [](long long v) { return exact_result(v, Int(v)); };
    CHECK(triad_bounds(ex(5), ex(7), 10).domain.values() == values({10, 12}));
    CHECK(triad_bounds(ex(3), ex(15), 18).value() == 18);
    CHECK(triad_bounds(ex(5), ex(25), 30).value() == 30);
    CHECK_THROWS_AS(triad_bounds(ex(1), ex(1), 5), InconsistencyError);
}

TEST_CASE("two-bridge identities") {
    auto ids = homeo_identities(parse_knot("TB(2,4)"), S(1));
    REQUIRE(ids.size() == 1);
    CHECK(same_manifold(ids[0], "TB(-2,2)", S(-1, 2)));
    CHECK(verify_identity(parse_knot("TB(2,4)"), S(1), parse_knot("4_1"), S(-1, 2), ds()).status == IdentityStatus::equal);

    ids = homeo_identities(parse_knot("TB(2,4)"), S(-1));
    REQUIRE(ids.size() == 1);
    CHECK(same_manifold(ids[0], "TB(2,2)", S(-1, 2)));

    ids = homeo_identities(parse_knot("TB(-3,-4)"), S(-9));
    REQUIRE(ids.size() == 1);
    CHECK(same_manifold(ids[0], "TB(2,-3)", S(9, 2)));

    ids = homeo_identities(parse_knot("TB(3,4)"), S(7));
    REQUIRE(ids.size() == 1);
    CHECK(same_manifold(ids[0], "TB(2,3)", S(7, 2)));
}

TEST_CASE("cable and pretzel identities") {
    auto ids = homeo_identities(parse_knot("m(3_1)"), S(5, 4));
    REQUIRE(ids.size() == 1);
    CHECK(same_manifold(ids[0], "Cab(3,2;m(3_1))", S(5)));
    CHECK(ids[0].family == "cable pq-1");

    ids = homeo_identities(parse_knot("P(4,3,-3)"), S(2));
    REQUIRE(ids.size() == 1);
    CHECK(same_manifold(ids[0], "P(1,3,-3)", S(-2)));

    CHECK(homeo_identities(parse_knot("8_19"), S(3)).empty());
}

TEST_CASE("verify_identity compares both sides") {
    IdentityReport r = verify_identity(parse_knot("6_2"), S(-9), parse_knot("m(5_2)"), S(9, 2), ds());
    CHECK(r.status == IdentityStatus::equal);
    CHECK(r.lhs.value() == 13);

    r = verify_identity(parse_knot("m(3_1)"), S(5, 4), parse_knot("Cab(3,2;m(3_1))"), S(5), ds());
    CHECK(r.status == IdentityStatus::equal);
    CHECK(r.lhs.value() == 5);

    r = verify_identity(parse_knot("3_1"), S(1), parse_knot("8_19"), S(1), ds());
    CHECK(r.status == IdentityStatus::contradiction);
}

TEST_CASE("twist knots at -1 form a chain") {
    for (long long n = 1; n <= 20; ++n) {
        DimResult r = surgery_dim(twist(n), S(-1), ds());
        INFO("Tw(" << n << ")");
        CHECK(r.value() == oracle::twist_dim(n, -1, 1));
    }
}

TEST_CASE("parse_manifold") {
    ManifoldDesc d = parse_manifold("surg(6_2; -9/1)");
    CHECK(d.kind == ManifoldDesc::Kind::surgery);
    CHECK(d.knot == parse_knot("6_2"));
    CHECK(d.slope == S(-9));
    CHECK(parse_manifold("surg(4_1; 0; mu)").bundle == Bundle::mu);
    CHECK(parse_manifold("lens(9,2)") == lens(9, 2));
    CHECK(parse_manifold("census(7)") == census(7));
    CHECK(parse_manifold("dcover(10_154)").kind == ManifoldDesc::Kind::dcover);
    CHECK(parse_manifold("S3") == sphere());
    CHECK(to_string(parse_manifold("surg(6_2; -9/1)")) == to_string(d));

    CHECK_THROWS_AS(parse_manifold("surg(6_2 -9)"), ParseError);
    CHECK_THROWS_AS(parse_manifold("blob(1)"), ParseError);
    CHECK_THROWS_AS(parse_manifold("surg(3_1; 1; mu)"), DomainError);
    CHECK_THROWS_AS(parse_manifold("lens(4,2)"), DomainError);
}

TEST_CASE("dim dispatches on the manifold kind") {
    CHECK(dim(sphere(), ds(), {}).value() == 1);
    CHECK(dim(parse_manifold("census(2)"), ds(), {}).value() == 18);
    CHECK(dim(parse_manifold("surg(U; 5/2)"), ds(), {}).value() == 5);
}
