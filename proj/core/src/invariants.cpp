#include "hsurf/invariants.hpp"

#include <array>

namespace hsurf {

std::string type_class_name(TypeClass t) {
    switch (t) {
        case TypeClass::GeneralType: return "general-type";
        case TypeClass::CalabiYau: return "calabi-yau";
        case TypeClass::Fano: return "fano";
    }
    return "?";
}

mpz_class volume_form_dim(uint32_t d, uint32_t n) {
    if (d < 1 || n < 1) throw IndexError("volume_form_dim needs d >= 1 and n >= 1");
    if (d < n + 2) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), d - 1, n + 1);
    return out;
}

TypeClass classify_type(uint32_t d, uint32_t n) {
    if (d < 1 || n < 1) throw IndexError("classify_type needs d >= 1 and n >= 1");
    if (d >= n + 3) return TypeClass::GeneralType;
    if (d == n + 2) return TypeClass::CalabiYau;
    return TypeClass::Fano;
}

bool not_rational_by_degree(uint32_t d, uint32_t n) {
    return d >= n + 2;
}

std::string linearity_class_name(LinearityClass c) {
    switch (c) {
        case LinearityClass::MustBeLinear: return "must-be-linear";
        case LinearityClass::LineConic: return "exceptional(line/conic)";
        case LinearityClass::PlaneCubic: return "exceptional(plane cubic)";
        case LinearityClass::QuarticSurface: return "exceptional(quartic surface)";
    }
    return "?";
}

LinearityClass isomorphism_linearity_class(uint32_t n, uint32_t d) {
    if (n == 1 && (d == 1 || d == 2)) return LinearityClass::LineConic;
    if (n == 1 && d == 3) return LinearityClass::PlaneCubic;
    if (n == 2 && d == 4) return LinearityClass::QuarticSurface;
    return LinearityClass::MustBeLinear;
}

std::string segre_verdict_name(SegreVerdict v) {
    return v == SegreVerdict::NotRationalOverQ ? "not-rational-over-Q" : "inconclusive";
}

namespace {

bool is_integer_cube(const mpz_class& z) {
    if (z == 0) return true;
    mpz_class root, abs = z < 0 ? mpz_class(-z) : z;
    bool exact = mpz_root(root.get_mpz_t(), abs.get_mpz_t(), 3) != 0;
    return exact;  // sign is absorbed: -r^3 = (-r)^3
}

bool is_rational_cube(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return is_integer_cube(c.get_num()) && is_integer_cube(c.get_den());
}

} // namespace

SegreVerdict segre_criterion(const mpq_class& a0, const mpq_class& a1, const mpq_class& a2,
                             const mpq_class& a3) {
    std::array<mpq_class, 4> a = {a0, a1, a2, a3};
    for (const auto& v : a)
        if (v == 0) throw GeometryError("segre_criterion: all four coefficients must be nonzero");
    // the three unordered pairings {i,j} | {k,l}
    const std::array<std::array<int, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& s : pairings) {
        mpq_class q = (a[s[0]] * a[s[1]]) / (a[s[2]] * a[s[3]]);
        if (is_rational_cube(q)) return SegreVerdict::Inconclusive;
    }
    return SegreVerdict::NotRationalOverQ;
}

VolumeFormChart affine_volume_chart(const Polynomial& h, size_t i) {
    if (i >= h.nvars()) throw IndexError("affine_volume_chart: chart index out of range");
    Polynomial di = h.derivative(i);
    if (di.is_zero())
        throw ChartError("use another chart: dh/dx" + std::to_string(i) + " is identically zero");
    // 1-based alternating sign, so 0-based chart i carries (-1)^(i+1)
    long sign = (i % 2 == 0) ? -1 : 1;
    RationalFunction density(Polynomial::constant(h.field(), h.nvars(), sign), di);
    return VolumeFormChart{i, std::move(density)};
}

FieldElement evaluate_volume_form(const Polynomial& h, const VolumeFormChart& chart, const Point& p,
                                  const std::vector<std::vector<FieldElement>>& basis) {
    size_t nv = h.nvars();
    Hypersurface X = Hypersurface::affine(h);
    if (p.chart() != Chart::Affine) throw ChartError("evaluate_volume_form works in an affine chart");
    if (!point_on(X, p)) throw GeometryError("evaluate_volume_form: point is not on the hypersurface");
    FieldElement dval = h.derivative(chart.chart_index).evaluate(p.coords());
    if (dval.is_zero())
        throw ChartError("use another chart: dh/dx" + std::to_string(chart.chart_index) +
                         " vanishes at the point");
    if (basis.size() != nv - 1)
        throw MismatchError("evaluate_volume_form: expected " + std::to_string(nv - 1) + " tangent vectors");
    auto grad = gradient_at(X, p);
    for (const auto& v : basis) {
        if (v.size() != nv) throw MismatchError("tangent vector has wrong coordinate count");
        FieldElement dot = FieldElement::zero(h.field());
        for (size_t i = 0; i < nv; ++i) dot += grad[i] * v[i];
        if (!dot.is_zero()) throw GeometryError("evaluate_volume_form: basis vector is not tangent at the point");
    }
    Matrix m = Matrix::from_columns(h.field(), basis);  // (nv) x (nv-1)
    if (m.rank() != nv - 1) throw GeometryError("evaluate_volume_form: tangent vectors are dependent");
    Matrix sub(h.field(), nv - 1, nv - 1);
    size_t r = 0;
    for (size_t i = 0; i < nv; ++i) {
        if (i == chart.chart_index) continue;
        for (size_t j = 0; j + 1 < nv; ++j) sub.at(r, j) = m.at(i, j);
        ++r;
    }
    long sign = (chart.chart_index % 2 == 0) ? -1 : 1;
    return FieldElement(h.field(), sign) * sub.det() / dval;
}

RationalFunction projective_volume_form_chart_coefficient(const Polynomial& H, const Polynomial& G) {
    if (H.field() != G.field() || H.nvars() != G.nvars())
        throw MismatchError("projective_volume_form_chart_coefficient: ring mismatch");
    size_t nv = H.nvars();  // n + 2
    if (nv < 3) throw IndexError("need at least three homogeneous coordinates");
    if (!H.is_homogeneous() || H.is_zero())
        throw HomogeneityError("H must be a nonzero homogeneous polynomial");
    if (!G.is_homogeneous() || G.is_zero())
        throw HomogeneityError("G must be a nonzero homogeneous polynomial");
    int d = H.degree();
    int want = d - static_cast<int>(nv);  // d - n - 2
    if (want < 0)
        throw HomogeneityError("no global volume forms in degree " + std::to_string(d) +
                               ": weight d-n-2 = " + std::to_string(want) + " is negative");
    if (G.degree() != want)
        throw HomogeneityError("deg G = " + std::to_string(G.degree()) + " but scaling weight forces " +
                               std::to_string(want));
    Polynomial dH = H.derivative(nv - 1).dehomogenize(0);
    if (dH.is_zero()) throw ChartError("use another chart: dH/dx_last vanishes identically");
    Polynomial g_aff = G.dehomogenize(0);
    return RationalFunction(g_aff, dH);
}

} // namespace hsurf
