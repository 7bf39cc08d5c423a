#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hsurf/invariants.hpp>
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

// independent monomial count: exponent vectors of total degree d in k slots
uint64_t count_monomials(int degree, int slots) {
    if (degree < 0) return 0;
    if (slots == 1) return 1;
    uint64_t total = 0;
    for (int e = 0; e <= degree; ++e) total += count_monomials(degree - e, slots - 1);
    return total;
}

} // namespace

TEST_CASE("volume form dimension vs brute-force monomial count") {
    CHECK(volume_form_dim(4, 2) == 1);   // d = n + 2
    CHECK(volume_form_dim(4, 3) == 0);   // d = n + 1
    CHECK(volume_form_dim(6, 3) == 5);   // degree-1 monomials in 5 variables
    for (uint32_t n = 1; n <= 6; ++n)
        for (uint32_t d = 1; d <= 12; ++d) {
            mpz_class lib = volume_form_dim(d, n);
            uint64_t brute = count_monomials(static_cast<int>(d) - static_cast<int>(n) - 2,
                                             static_cast<int>(n) + 2);
            CHECK(lib == mpz_class(static_cast<unsigned long>(brute)));
        }
}

TEST_CASE("degree trichotomy and the one-sided rationality certificate") {
    CHECK(classify_type(3, 2) == TypeClass::Fano);
    CHECK(!not_rational_by_degree(3, 2));
    CHECK(classify_type(5, 3) == TypeClass::CalabiYau);
    CHECK(classify_type(7, 3) == TypeClass::GeneralType);
    for (uint32_t n = 1; n <= 8; ++n) {
        CHECK(classify_type(n + 1, n) == TypeClass::Fano);
        CHECK(classify_type(n + 2, n) == TypeClass::CalabiYau);
        CHECK(classify_type(n + 3, n) == TypeClass::GeneralType);
        CHECK(not_rational_by_degree(n + 2, n));
        CHECK(!not_rational_by_degree(n + 1, n));
        // exactly one class per pair
        for (uint32_t d = 1; d <= 12; ++d) {
            int hits = (classify_type(d, n) == TypeClass::Fano) +
                       (classify_type(d, n) == TypeClass::CalabiYau) +
                       (classify_type(d, n) == TypeClass::GeneralType);
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("linearity classification of isomorphisms") {
    CHECK(isomorphism_linearity_class(1, 3) == LinearityClass::PlaneCubic);
    CHECK(isomorphism_linearity_class(2, 4) == LinearityClass::QuarticSurface);
    CHECK(isomorphism_linearity_class(3, 3) == LinearityClass::MustBeLinear);
    CHECK(isomorphism_linearity_class(1, 1) == LinearityClass::LineConic);
    CHECK(isomorphism_linearity_class(1, 2) == LinearityClass::LineConic);
    CHECK(isomorphism_linearity_class(2, 3) == LinearityClass::MustBeLinear);
    CHECK(isomorphism_linearity_class(1, 4) == LinearityClass::MustBeLinear);
}

TEST_CASE("Segre criterion on diagonal cubic surfaces") {
    CHECK(segre_criterion(1, 1, 1, 1) == SegreVerdict::Inconclusive);
    CHECK(segre_criterion(1, 2, 4, 8) == SegreVerdict::Inconclusive);  // 8/8 = 1 is a cube
    CHECK(segre_criterion(1, 1, 1, 2) == SegreVerdict::NotRationalOverQ);
    // signs are absorbed into cubes
    CHECK(segre_criterion(1, 1, 1, -8) == SegreVerdict::Inconclusive);
    CHECK(segre_criterion(mpq_class(1, 8), 1, 1, 1) == SegreVerdict::Inconclusive);
    CHECK_THROWS_AS(segre_criterion(0, 1, 1, 1), GeometryError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 100; ++it) {
        std::array<mpq_class, 4> a;
        for (auto& v : a) {
            long num = 0, den = 0;
            while (num == 0) num = d(rng);
            while (den == 0) den = d(rng);
            v = mpq_class(num, den);
            v.canonicalize();
        }
        SegreVerdict base = segre_criterion(a[0], a[1], a[2], a[3]);
        std::array<size_t, 4> idx = {0, 1, 2, 3};
        std::shuffle(idx.begin(), idx.end(), rng);
        CHECK(segre_criterion(a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]) == base);
    }
}

TEST_CASE("affine volume form charts on the circle") {
    Polynomial h = P("x0^2 + x1^2 - 1", 2);
    Point p = parse_point("0, 1", Q);
    std::vector<std::vector<FieldElement>> basis = {{FieldElement::one(Q), FieldElement::zero(Q)}};

    auto chart1 = affine_volume_chart(h, 1);
    FieldElement v = evaluate_volume_form(h, chart1, p, basis);
    CHECK(v.to_string() == "1/2");

    // chart 0 has dh/dx0 = 2 x0 vanishing at p
    auto chart0 = affine_volume_chart(h, 0);
    CHECK_THROWS_AS(evaluate_volume_form(h, chart0, p, basis), ChartError);

    // chart independence where both charts are usable
    Point q = parse_point("3/5, 4/5", Q);
    std::vector<std::vector<FieldElement>> tangent = {
        {FieldElement(Q, mpq_class(-4, 5)), FieldElement(Q, mpq_class(3, 5))}};
    FieldElement v0 = evaluate_volume_form(h, chart0, q, tangent);
    FieldElement v1 = evaluate_volume_form(h, chart1, q, tangent);
    CHECK(v0 == v1);
    CHECK(v0.to_string() == "-1/2");

    // scaling the basis vector scales the value
    std::vector<std::vector<FieldElement>> doubled = {
        {FieldElement(Q, mpq_class(-8, 5)), FieldElement(Q, mpq_class(6, 5))}};
    CHECK(evaluate_volume_form(h, chart0, q, doubled) == v0 * FieldElement(Q, 2));

    // a chart whose derivative vanishes identically is rejected outright
    CHECK_THROWS_AS(affine_volume_chart(P("x1^2 - 1", 2), 0), ChartError);
    // non-tangent basis vectors are rejected
    std::vector<std::vector<FieldElement>> skew = {{FieldElement::one(Q), FieldElement::one(Q)}};
    CHECK_THROWS_AS(evaluate_volume_form(h, chart1, p, skew), GeometryError);
}

TEST_CASE("volume form value is alternating in the tangent frame") {
    Polynomial h = P("x0^2 + x1^2 + x2^2 - 1", 3);
    Point p = parse_point("0, 0, 1", Q);
    std::vector<FieldElement> e0 = {FieldElement::one(Q), FieldElement::zero(Q), FieldElement::zero(Q)};
    std::vector<FieldElement> e1 = {FieldElement::zero(Q), FieldElement::one(Q), FieldElement::zero(Q)};
    auto chart = affine_volume_chart(h, 2);
    FieldElement ab = evaluate_volume_form(h, chart, p, {e0, e1});
    FieldElement ba = evaluate_volume_form(h, chart, p, {e1, e0});
    CHECK(ab == -ba);
    CHECK(!ab.is_zero());
    CHECK_THROWS_AS(evaluate_volume_form(h, chart, p, {e0, e0}), GeometryError);  // dependent
}

TEST_CASE("projective chart coefficient of global volume forms") {
    // plane cubic: d - n - 2 = 0, G must be constant
    Polynomial H = P("x0^3 - x0*x2^2 - x1^2*x2", 3);
    Polynomial G = P("2", 3);
    RationalFunction density = projective_volume_form_chart_coefficient(H, G);
    // dH/dx2 = -2 x0 x2 - x1^2, dehomogenized at slot 0 to vars (x0, x1)
    CHECK(density.den() == P("x0^2 + 2*x1", 2).monic());
    CHECK(density.num() == P("-2", 2));

    // Fano range has no global forms
    CHECK_THROWS_AS(
        projective_volume_form_chart_coefficient(P("x0^2 + x1^2 + x2^2", 3), P("1", 3)),
        HomogeneityError);

    // quintic threefold: G constant, density 1 / (dH/dx4 in the chart)
    Polynomial quintic = P("x0^5 + x1^5 + x2^5 + x3^5 + x4^5", 5);
    RationalFunction d5 = projective_volume_form_chart_coefficient(quintic, P("5", 5));
    CHECK(d5.den() == P("x3^4", 4));
    CHECK(d5.num() == P("1", 4));

    // degree mismatch names the forced weight
    CHECK_THROWS_AS(projective_volume_form_chart_coefficient(quintic, P("x0", 5)), HomogeneityError);
}
