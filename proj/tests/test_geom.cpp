#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hsurf/geom.hpp>
#include <hsurf/io.hpp>
#include <hsurf/parse.hpp>
#include <hsurf/random.hpp>

#include <random>

using namespace hsurf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial P(const std::string& text, size_t nvars, FieldSpec f = Q) {
    return parse_polynomial(text, nvars, f);
}

Point pt(const std::string& text, FieldSpec f = Q) {
    return parse_point(text, f);
}

LinearSubspace span_of(FieldSpec f, size_t ambient, const std::vector<std::vector<long>>& cols) {
    Matrix A(f, ambient, cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < ambient; ++r) A.at(r, c) = FieldElement(f, cols[c][r]);
    return LinearSubspace(std::move(A));
}

} // namespace

TEST_CASE("point_on exact membership") {
    Hypersurface circle = Hypersurface::affine(P("x0^2 + x1^2 - 1", 2));
    CHECK(point_on(circle, pt("3/5, 4/5")));
    CHECK(!point_on(circle, pt("1, 1")));

    Hypersurface fermat = Hypersurface::projective(P("x0^3 + x1^3 + x2^3 + x3^3", 4));
    CHECK(point_on(fermat, pt("1 : -1 : 0 : 0")));
}

TEST_CASE("projective points canonicalize, membership is representative independent") {
    Point a = pt("2 : -2 : 0 : 4");
    Point b = pt("1 : -1 : 0 : 2");
    CHECK(a == b);
    CHECK_THROWS_AS(Point::projective({FieldElement::zero(Q), FieldElement::zero(Q)}), GeometryError);

    std::mt19937_64 rng(3);
    FieldSpec f101 = FieldSpec::prime(101);
    Hypersurface X = Hypersurface::projective(P("x0^2*x1 + x2^3 - x0*x1*x2", 3, f101));
    for (int it = 0; it < 40; ++it) {
        std::vector<FieldElement> coords;
        for (int i = 0; i < 3; ++i) coords.push_back(random_element(f101, rng));
        bool nz = false;
        for (auto& c : coords) nz = nz || !c.is_zero();
        if (!nz) continue;
        FieldElement lambda = random_nonzero_element(f101, rng);
        std::vector<FieldElement> scaled;
        for (auto& c : coords) scaled.push_back(c * lambda);
        CHECK(point_on(X, Point::projective(coords)) == point_on(X, Point::projective(scaled)));
    }
}

TEST_CASE("singular locus equations") {
    Hypersurface Xs = Hypersurface::projective(P("x0^2 + x1^2 + x2^2", 3));
    auto eqs = singular_locus_equations(Xs);
    REQUIRE(eqs.size() == 3);
    CHECK(eqs[0] == P("2*x0", 3));
    CHECK(eqs[1] == P("2*x1", 3));
    CHECK(eqs[2] == P("2*x2", 3));

    Hypersurface coords3 = Hypersurface::projective(P("x0*x1*x2", 3));
    auto eqs2 = singular_locus_equations(coords3);
    // common zeros are exactly the coordinate points
    for (const auto& text : {"1 : 0 : 0", "0 : 1 : 0", "0 : 0 : 1"}) {
        Point p = pt(text);
        for (const auto& e : eqs2) CHECK(e.evaluate(p.coords()).is_zero());
    }
    CHECK(!eqs2[0].evaluate(pt("0 : 1 : 1").coords()).is_zero());

    // affine variant reports h together with the partials
    Hypersurface circle = Hypersurface::affine(P("x0^2 + x1^2 - 1", 2));
    auto eqs3 = singular_locus_equations(circle);
    REQUIRE(eqs3.size() == 3);
    CHECK(eqs3[0] == circle.defining());
}

TEST_CASE("smoothness and tangent planes") {
    Hypersurface sphere = Hypersurface::affine(P("x0^2 + x1^2 + x2^2 - 1", 3));
    Point north = pt("0, 0, 1");
    CHECK(is_smooth_at(sphere, north));
    // gradient (0,0,2): affine tangent hyperplane 2*x2 - 2, i.e. x2 = 1
    CHECK(tangent_hyperplane(sphere, north) == P("2*x2 - 2", 3));

    Hypersurface cone = Hypersurface::affine(P("x0^2 + x1^2 - x2^2", 3));
    CHECK(!is_smooth_at(cone, pt("0, 0, 0")));
    CHECK_THROWS_AS(tangent_hyperplane(cone, pt("0, 0, 0")), GeometryError);

    Hypersurface fermat = Hypersurface::projective(P("x0^3 + x1^3 + x2^3 + x3^3", 4));
    Point p = pt("1 : -1 : 0 : 0");
    CHECK(is_smooth_at(fermat, p));
    CHECK(tangent_hyperplane(fermat, p) == P("3*x0 + 3*x1", 4));
    CHECK_THROWS_AS(is_smooth_at(fermat, pt("1 : 1 : 0 : 0")), GeometryError);  // not on X
}

TEST_CASE("tangent hyperplane vanishes at the point of tangency away from p | deg") {
    FieldSpec f = FieldSpec::prime(101);
    std::mt19937_64 rng(8);
    Hypersurface X = Hypersurface::projective(P("x0^3 + x1^3 + x2^3 + x3^3", 4, f));
    int tested = 0;
    while (tested < 20) {
        auto p = random_point_on(X, 50, rng);
        REQUIRE(p.has_value());
        if (!is_smooth_at(X, *p)) continue;
        Polynomial t = tangent_hyperplane(X, *p);
        CHECK(t.evaluate(p->coords()).is_zero());
        ++tested;
    }
}

TEST_CASE("contains_subspace") {
    Hypersurface fermat = Hypersurface::projective(P("x0^3 + x1^3 + x2^3 + x3^3", 4));
    // x0 = -x1, x2 = -x3
    CHECK(contains_subspace(fermat, span_of(Q, 4, {{-1, 1, 0, 0}, {0, 0, -1, 1}})));
    CHECK(!contains_subspace(fermat, span_of(Q, 4, {{1, 1, 0, 0}, {0, 0, -1, 1}})));

    Hypersurface S = Hypersurface::projective(P("x0*x2*x3 + x1*x2^2", 4));
    // L1 = (x0 = x1 = 0)
    CHECK(contains_subspace(S, span_of(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}})));

    Hypersurface quadric = Hypersurface::projective(P("x0^2 + 5*x1^2 - 3*x2^2 + x3^2", 4));
    CHECK(!contains_subspace(quadric, span_of(Q, 4, {{1, 0, 0, 0}, {0, 1, 2, 3}})));
}

TEST_CASE("subspaces_disjoint by exact rank") {
    LinearSubspace L1 = span_of(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    LinearSubspace L2 = span_of(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(subspaces_disjoint(L1, L2));
    CHECK(!subspaces_disjoint(L1, L1));

    // Fermat-cubic lines with componentwise different cube roots of -1 in F7
    FieldSpec f7 = FieldSpec::prime(7);
    LinearSubspace A = span_of(f7, 4, {{3, 1, 0, 0}, {0, 0, 5, 1}});
    LinearSubspace B = span_of(f7, 4, {{5, 1, 0, 0}, {0, 0, 6, 1}});
    CHECK(subspaces_disjoint(A, B));
}

TEST_CASE("linear subspace equation view") {
    LinearSubspace L = span_of(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    auto eqs = L.equations();
    REQUIRE(eqs.size() == 2);
    for (const auto& e : eqs) {
        CHECK(e.degree() == 1);
        CHECK(L.pull_back(e).is_zero());
    }
    CHECK_THROWS_AS(span_of(Q, 3, {{1, 0, 0}, {2, 0, 0}}), GeometryError);  // rank deficient
}

TEST_CASE("random_point_on samples genuine points") {
    FieldSpec f5 = FieldSpec::prime(5);
    std::mt19937_64 rng(4);
    Hypersurface sphere = Hypersurface::affine(P("x0^2 + x1^2 + x2^2 - 1", 3, f5));
    auto p = random_point_on(sphere, 100, rng);
    REQUIRE(p.has_value());
    CHECK(point_on(sphere, *p));

    Hypersurface proj = Hypersurface::projective(P("x0^2*x1 + x2^3", 3, FieldSpec::prime(11)));
    auto q = random_point_on(proj, 100, rng);
    REQUIRE(q.has_value());
    CHECK(point_on(proj, *q));

    Hypersurface rational_circle = Hypersurface::affine(P("x0^2 + x1^2 - 1", 2));
    CHECK_THROWS_AS(random_point_on(rational_circle, 10, rng), UnsupportedFieldError);
    Hypersurface tiny = Hypersurface::affine(P("x0^2 + x1^2 + 1", 2, FieldSpec::prime(3)));
    CHECK_THROWS_AS(random_point_on(tiny, 10, rng), UnsupportedFieldError);  // p <= 3 guard
    // but membership over F3 still works: 1 + 1 + 1 = 0
    CHECK(point_on(tiny, pt("1, 1", FieldSpec::prime(3))));
}

TEST_CASE("no point found within the try budget is reported as absence") {
    // x0^2 + x1^2 + 1 has no zero over F7? squares mod 7: {0,1,2,4};
    // need s1 + s2 = 6: 2+4 works, so points exist; use an unsolvable one:
    // x0^2 - 3 over F5 (3 is not a square mod 5)
    FieldSpec f5 = FieldSpec::prime(5);
    std::mt19937_64 rng(9);
    Hypersurface X = Hypersurface::affine(P("x0^2 - 3", 1, f5));
    CHECK(!random_point_on(X, 25, rng).has_value());
}

TEST_CASE("smooth Fermat partials have no common zero over p not dividing d") {
    // exhaustive scan, small p and n
    for (uint32_t p : {5u, 7u}) {
        FieldSpec f = FieldSpec::prime(p);
        for (uint32_t d : {3u, 4u}) {
            if (p % d == 0) continue;
            Hypersurface X = Hypersurface::projective(
                P("x0^" + std::to_string(d) + " + x1^" + std::to_string(d) + " + x2^" + std::to_string(d), 3, f));
            auto eqs = singular_locus_equations(X);
            for (uint32_t a = 0; a < p; ++a)
                for (uint32_t b = 0; b < p; ++b)
                    for (uint32_t c = 0; c < p && (a || b || c); ++c) {
                        std::vector<FieldElement> v = {FieldElement(f, a), FieldElement(f, b),
                                                       FieldElement(f, c)};
                        bool all_zero = true;
                        for (const auto& e : eqs) all_zero = all_zero && e.evaluate(v).is_zero();
                        if (a || b || c) CHECK(!all_zero);
                    }
        }
    }
}

TEST_CASE("hypersurface fixture round trip") {
    Hypersurface X = Hypersurface::projective(P("x0^3 + 2*x1^3 - x2^3", 3, FieldSpec::prime(7)));
    std::ostringstream out;
    write_hypersurface(out, X);
    std::istringstream in(out.str());
    Hypersurface back = read_hypersurface(in);
    CHECK(back.defining() == X.defining());
    CHECK(back.chart() == X.chart());

    std::istringstream amb("Q\nambient affine 2\n");
    Hypersurface space = read_hypersurface(amb);
    CHECK(space.is_ambient_space());
    CHECK(space.nvars() == 2);
}
