#include <catch_amalgamated.hpp>

#include <isharp/isharp.hpp>

using namespace isharp;

namespace {

const Dataset& ds() { return bundled_dataset(); }

std::vector<Int> poly(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("parse_knot round-trips the expression syntax") {
    for (const char* s : {"m(3_1)", "Cab(3,2;T(2,3))", "T(3,5)", "Tw(7)", "P(-2,3,7)", "TB(3,4)", "3_1 # m(5_2)", "U"})
        CHECK(to_string(parse_knot(s)) == s);
    CHECK(parse_knot("m(m(3_1))") == parse_knot("3_1"));
    CHECK(parse_knot("3_1 # m(5_2)") == parse_knot("3_1#m(5_2)"));
}

TEST_CASE("parse_knot rejects malformed or invalid input") {
    CHECK_THROWS_AS(parse_knot("TB(3,3)"), DomainError);
    CHECK_THROWS_AS(parse_knot("T(2,4)"), DomainError);
    CHECK_THROWS_AS(parse_knot("m(3_1"), ParseError);
    CHECK_THROWS_AS(parse_knot("Cab(2,4;3_1)"), DomainError);
    CHECK_THROWS_AS(parse_knot(""), ParseError);
}

TEST_CASE("genus of families, cables and table knots") {
    CHECK(genus(parse_knot("T(3,5)"), ds()) == Range::exact(4));
    CHECK(genus(parse_knot("Cab(3,2;T(2,3))"), ds()) == Range::exact(3));
    CHECK(genus(parse_knot("Tw(7)"), ds()) == Range::exact(1));
    CHECK(genus(parse_knot("8_19"), ds()) == Range::exact(3));
    CHECK(genus(parse_knot("3_1#4_1"), ds()) == Range::exact(2));
    CHECK(genus(unknot(), ds()) == Range::exact(0));
}

TEST_CASE("structural data of table knots") {
    StructuralData s = structural(parse_knot("8_8"), ds());
    REQUIRE(s.alexander);
    CHECK(*s.alexander == poly({9, -6, 2}));
    CHECK(s.determinant == Int(25));

    StructuralData u = structural(unknot(), ds());
    CHECK(u.determinant == Int(1));
    CHECK(u.slice == Tri::yes);

    StructuralData p = structural(parse_knot("10_139"), ds());
    CHECK(p.positive == Tri::yes);
    CHECK(p.genus == Range::exact(4));

    StructuralData m = structural(parse_knot("m(10_139)"), ds());
    CHECK(m.mirror_positive == Tri::yes);

    CHECK(structural(parse_knot("3_1"), ds()).signature == Int(2));
    CHECK(structural(parse_knot("m(3_1)"), ds()).signature == Int(-2));
}

TEST_CASE("aliases resolve to table knots") {
    auto name_of = [](const char* code) {
        auto [r, mirrored] = resolve_alias(code, ds());
        return r ? (mirrored ? "m(" + r->name + ")" : r->name) : std::string("none");
    };
    CHECK(name_of("TB(-3,-4)") == "6_2");
    CHECK(name_of("P(1,3,-3)") == "6_1");
    CHECK(name_of("Tw(2)") == "4_1");
    CHECK(name_of("8_19") == "8_19");
}

TEST_CASE("Alexander polynomials multiply under connected sum") {
    StructuralData a = structural(parse_knot("3_1"), ds());
    StructuralData b = structural(parse_knot("4_1"), ds());
    StructuralData s = structural(parse_knot("3_1#4_1"), ds());
    REQUIRE(s.alexander);
    CHECK(*s.alexander == alexander_product(*a.alexander, *b.alexander));
    CHECK(*s.determinant == *a.determinant * *b.determinant);
}
