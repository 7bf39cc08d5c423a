#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hsurf/enumerate.hpp>
#include <hsurf/io.hpp>
#include <hsurf/random.hpp>

#include <random>
#include <set>

using namespace hsurf;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("unit circle, height 2: the exact seven points") {
    auto r = enum_rational_points({mpq_class(1)}, 2);
    // parameters ascend: -2, -1, -1/2, 0, 1/2, 1, 2
    REQUIRE(r.parametrized.size() == 7);
    std::set<Point> got(r.parametrized.begin(), r.parametrized.end());
    std::set<Point> want = {
        parse_point("0, 1", Q),         parse_point("1, 0", Q),
        parse_point("-1, 0", Q),        parse_point("4/5, -3/5", Q),
        parse_point("-4/5, -3/5", Q),   parse_point("4/5, 3/5", Q),
        parse_point("-4/5, 3/5", Q)};
    CHECK(got == want);
    // y = 0 sits fourth in parameter order and is the north pole
    CHECK(r.parametrized[3] == parse_point("0, 1", Q));
    // ... and the south pole is emitted separately
    REQUIRE(r.excluded.size() == 1);
    CHECK(r.excluded[0] == parse_point("0, -1", Q));
    for (const auto& p : r.parametrized) CHECK(point_on(r.quadric, p));
}

TEST_CASE("parameters on the excluded conic are skipped") {
    // a = (-1): y = 1 gives Sigma = -1 and 1 + Sigma = 0
    auto r = enum_rational_points({mpq_class(-1)}, 1);
    REQUIRE(r.parametrized.size() == 1);
    CHECK(r.parametrized[0] == parse_point("0, 1", Q));
}

TEST_CASE("height measures max(|num|, den) per coordinate") {
    auto r2 = enum_rational_points({mpq_class(1)}, 3);
    // height 3 adds y in {±3, ±3/2, ±1/3, ±2/3} over height 2, and the
    // parametrization is injective, so 7 + 8 distinct points
    CHECK(r2.parametrized.size() == 15);
    CHECK_THROWS_AS(enum_rational_points({mpq_class(1)}, 0), IndexError);
    CHECK_THROWS_AS(enum_rational_points({mpq_class(0)}, 1), GeometryError);
}

TEST_CASE("finite-field shadow: parametrized plus excluded equals brute force") {
    std::mt19937_64 rng(7);
    for (uint32_t p : {5u, 7u, 11u, 13u}) {
        FieldSpec f = FieldSpec::prime(p);
        for (size_t n : {1ul, 2ul}) {
            for (int rep = 0; rep < 2; ++rep) {
                std::vector<FieldElement> a;
                for (size_t i = 0; i < n; ++i) a.push_back(random_nonzero_element(f, rng));
                auto param = enum_quadric_points_mod_p(a);
                auto brute = brute_force_quadric_points(a);
                std::set<Point> lhs(brute.begin(), brute.end());
                std::set<Point> rhs(param.parametrized.begin(), param.parametrized.end());
                rhs.insert(param.excluded.begin(), param.excluded.end());
                CHECK(lhs == rhs);
                // the two sides of the split are disjoint
                for (const auto& q : param.excluded)
                    CHECK(std::find(param.parametrized.begin(), param.parametrized.end(), q) ==
                          param.parametrized.end());
            }
        }
    }
}

TEST_CASE("field guards") {
    FieldSpec f3 = FieldSpec::prime(3);
    CHECK_THROWS_AS(enum_quadric_points_mod_p({FieldElement::one(f3)}), UnsupportedFieldError);
    CHECK_THROWS_AS(enum_quadric_points_mod_p({FieldElement::one(Q)}), UnsupportedFieldError);
}
