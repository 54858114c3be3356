#include <catch_amalgamated.hpp>

#include <isharp/isharp.hpp>

using namespace isharp;

namespace {

const Dataset& ds() { return bundled_dataset(); }

InvariantBundle inv(const char* k, const DeduceOptions& opts = {}) { return deduce(parse_knot(k), ds(), opts); }

Value exact(long long x) { return Value::exact(x); }
Value exact(long long p, long long q) { return Value::exact(Rational(p, q)); }

bool has_rule(const InvariantBundle& b, const std::string& rule) {
    for (const auto& e : b.trace)
        if (e.rule == rule) return true;
    return false;
}

}  // namespace

TEST_CASE("deduce reads the tables") {
    InvariantBundle b = inv("8_19");
    CHECK(b.nu == exact(5));
    CHECK(b.tau == exact(3));
    CHECK(b.r0 == exact(5));
    CHECK(b.delta == exact(0));
    CHECK(b.shape == Shape::V);
    CHECK(has_rule(b, "R1"));
    for (const auto& e : b.trace) CHECK_FALSE(e.citation.empty());
}

TEST_CASE("deduce leaves nu of 7_7 as an interval") {
    InvariantBundle b = inv("7_7");
    CHECK(b.tau == exact(0));
    CHECK_FALSE(b.nu.is_exact());
    CHECK(b.nu.lo() == Rational(-1));
    CHECK(b.nu.hi() == Rational(1));
}

TEST_CASE("slice sums are W-shaped with vanishing invariants") {
    InvariantBundle b = inv("3_1 # m(3_1)");
    CHECK(b.nu == exact(0));
    CHECK(b.tau == exact(0));
    CHECK(b.shape == Shape::W);
    CHECK(has_rule(b, "R3"));
}

TEST_CASE("family rules") {
    InvariantBundle tw5 = inv("Tw(5)");
    CHECK(tw5.nu == exact(-1));
    CHECK(tw5.r0 == exact(5));

    InvariantBundle tw4 = inv("Tw(4)");
    CHECK(tw4.nu == exact(0));
    CHECK(tw4.r0 == exact(4));

    InvariantBundle t35 = inv("T(3,5)");
    CHECK(t35.nu == exact(7));
    CHECK(t35.r0 == exact(7));

    InvariantBundle p33 = inv("P(7,3,-3)");
    CHECK(p33.nu == exact(0));
    CHECK(p33.r0 == exact(4));
    CHECK(p33.shape == Shape::W);

    InvariantBundle p32 = inv("P(5,3,2)");
    CHECK(p32.nu == exact(5));
    CHECK(p32.r0 == exact(17));
}

TEST_CASE("the table-free engine re-derives the tables") {
    DeduceOptions no_tables{false, false};
    InvariantBundle b = refined_invariants(parse_knot("8_19"), ds(), no_tables);
    CHECK(b.nu == exact(5));
    CHECK(b.tau == exact(3));
    CHECK(b.r0 == exact(5));
    CHECK_FALSE(has_rule(b, "R1"));

    InvariantBundle m52 = refined_invariants(parse_knot("m(5_2)"), ds(), no_tables);
    CHECK(m52.nu == exact(1));
    CHECK(m52.tau == exact(1));
    CHECK(m52.r0 == exact(3));
}

TEST_CASE("mirroring negates nu and tau and fixes r0") {
    for (const char* k : {"5_2", "8_19", "T(2,7)", "Tw(3)", "P(3,3,2)", "Cab(3,2;3_1)", "3_1 # 5_1"}) {
        InvariantBundle a = inv(k);
        InvariantBundle b = deduce(mirror(parse_knot(k)), ds());
        INFO(k);
        CHECK(b.nu == a.nu.negate());
        CHECK(b.tau == a.tau.negate());
        CHECK(b.r0 == a.r0);
    }
}

TEST_CASE("tau is additive over exact sums") {
    InvariantBundle a = inv("8_19"), b = inv("m(5_2)");
    InvariantBundle s = inv("8_19 # m(5_2)");
    CHECK(s.tau == a.tau.plus(b.tau));
    REQUIRE(s.nu.is_bounded());
    CHECK(*s.nu.lo() >= Rational(5));
    CHECK(*s.nu.hi() <= Rational(7));
}

TEST_CASE("tau_interval_from_nu") {
    CHECK(tau_interval_from_nu(5) == Value::interval(Rational(2), Rational(3), false));
    CHECK(tau_interval_from_nu(0) == Value::interval(Rational(-1, 2), Rational(1, 2), false));
    CHECK(tau_interval_from_nu(-3) == Value::interval(Rational(-2), Rational(-1), false));
    CHECK(tau_interval_from_nu(-3).contains(inv("5_1").tau.exact_value()));
}

TEST_CASE("sl_upper_bound") {
    CHECK(sl_upper_bound(parse_knot("8_19"), ds()).bound == Int(5));
    CHECK(sl_upper_bound(unknot(), ds()).bound == Int(-1));
    CHECK(sl_upper_bound(parse_knot("m(3_1)"), ds()).bound == Int(1));
    CHECK_FALSE(sl_upper_bound(parse_knot("7_7"), ds()).violated);
}

TEST_CASE("crossing_change_bound") {
    CHECK(crossing_change_bound(0) == Value::interval(Rational(0), Rational(1), false));
    CHECK(crossing_change_bound(-2) == Value::interval(Rational(-2), Rational(-1), false));
}

TEST_CASE("lspace_cable") {
    CHECK(lspace_cable(3, 2, parse_knot("m(3_1)"), ds()) == Tri::yes);
    CHECK(lspace_cable(1, 2, parse_knot("m(3_1)"), ds()) == Tri::no);
    CHECK(lspace_cable(7, 2, parse_knot("4_1"), ds()) == Tri::no);
}

TEST_CASE("lspace_knot_invariants") {
    using P = std::pair<Int, Int>;
    CHECK(lspace_knot_invariants(parse_knot("P(-2,3,7)"), ds()) == P{9, 9});
    CHECK(lspace_knot_invariants(parse_knot("T(3,4)"), ds()) == P{5, 5});
    CHECK(lspace_knot_invariants(parse_knot("Cab(3,2;m(3_1))"), ds()) == P{5, 5});
    CHECK_THROWS_AS(lspace_knot_invariants(parse_knot("4_1"), ds()), DomainError);
}

TEST_CASE("half-integral tau is kept unless strict") {
    InvariantBundle loose = inv("7_7");
    InvariantBundle strict = inv("7_7", DeduceOptions{true, true});
    CHECK(strict.tau.subset_of(loose.tau));
}

TEST_CASE("bundles serialize with their trace") {
    ojson j = inv("8_19").to_json(true);
    CHECK(j.at("knot") == "8_19");
    CHECK(j.at("shape") == "V");
    CHECK(j.at("trace").is_array());
    CHECK_FALSE(j.at("trace").empty());
}
