#ifndef HSURF_INVARIANTS_HPP
#define HSURF_INVARIANTS_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "hsurf/geom.hpp"
#include "hsurf/ratmap.hpp"

namespace hsurf {

enum class TypeClass { GeneralType, CalabiYau, Fano };
std::string type_class_name(TypeClass t);

// Dimension of the space of everywhere-defined algebraic volume forms on a
// smooth degree-d hypersurface of dimension n: the number of degree d-n-2
// monomials in n+2 variables, i.e. binomial(d-1, n+1); zero when d < n+2.
mpz_class volume_form_dim(uint32_t d, uint32_t n);

// Degree/dimension trichotomy for smooth hypersurfaces.
TypeClass classify_type(uint32_t d, uint32_t n);

// One-sided certificate: true means certified non-rational (smoothness is
// caller-asserted); false means no conclusion.
bool not_rational_by_degree(uint32_t d, uint32_t n);

enum class LinearityClass { MustBeLinear, LineConic, PlaneCubic, QuarticSurface };
std::string linearity_class_name(LinearityClass c);

// Whether an isomorphism of irreducible hypersurfaces of dimension n and
// degree d is forced to be linear, or lands in one of the three exceptional
// families.
LinearityClass isomorphism_linearity_class(uint32_t n, uint32_t d);

enum class SegreVerdict { NotRationalOverQ, Inconclusive };
std::string segre_verdict_name(SegreVerdict v);

// Diagonal cubic surface a0*x0^3 + ... + a3*x3^3: not rational over Q when no
// pairing quotient (a_i a_j)/(a_k a_l) is a rational cube.
SegreVerdict segre_criterion(const mpq_class& a0, const mpq_class& a1, const mpq_class& a2,
                             const mpq_class& a3);

// Density of the affine volume form sigma_i on (h = 0): sign/(dh/dx_i), the
// sign following the classical 1-based alternating convention.
struct VolumeFormChart {
    size_t chart_index;
    RationalFunction density;
};

VolumeFormChart affine_volume_chart(const Polynomial& h, size_t i);

// Value of sigma_i on a frame of tangent vectors at a smooth point: the
// density at p times the determinant of the basis matrix with row i deleted.
// Basis vectors must be tangent (orthogonal to the gradient) and independent.
FieldElement evaluate_volume_form(const Polynomial& h, const VolumeFormChart& chart, const Point& p,
                                  const std::vector<std::vector<FieldElement>>& basis);

// Chart density of the global form G * Sigma_X on the distinguished affine
// chart x0 = 1 of a smooth projective hypersurface (H = 0): the dehomogenized
// G over the dehomogenized last partial of H. Requires deg G = deg H - n - 2.
RationalFunction projective_volume_form_chart_coefficient(const Polynomial& H, const Polynomial& G);

} // namespace hsurf

#endif
