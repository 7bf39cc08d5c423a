#ifndef HSURF_CONSTRUCTIONS_HPP
#define HSURF_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "hsurf/geom.hpp"
#include "hsurf/ratmap.hpp"

namespace hsurf {

// Every generator returns certified maps: the certificate is the full
// verify_birational (or involution) report, never assumed.

struct SphereParametrization {
    Hypersurface source;   // a1*x0^2 + ... + an*x_{n-1}^2 + x_n^2 = 1, affine
    Hypersurface target;   // ambient affine n-space
    RationalMap forward;   // projection from the south pole
    RationalMap inverse;
    VerifyReport certificate;
};
SphereParametrization sphere_stereographic(size_t n, const std::vector<FieldElement>& a);

struct QuadricProjection {
    RationalMap forward;   // linear coordinates
    RationalMap inverse;   // quadratic coordinates
    Hypersurface target;   // ambient projective space of the hyperplane parameters
    VerifyReport certificate;
};
QuadricProjection quadric_projection(const Hypersurface& Q, const Point& p, const LinearSubspace& H);

struct MonoidParametrization {
    Hypersurface X;        // H_low * x_{n+1} + H_high = 0
    RationalMap forward;   // drop the last coordinate
    RationalMap inverse;
    VerifyReport certificate;
};
MonoidParametrization monoid_param(const Polynomial& H_low, const Polynomial& H_high);

// Table of linear forms with F = sum_{i<=n<j} l_ij * x_i * x_j (cubic case).
struct TwoPlanesTable {
    size_t n;
    std::vector<std::vector<Polynomial>> entries;  // entries[i][j-(n+1)]
    const Polynomial& at(size_t i, size_t j) const { return entries[i][j - (n + 1)]; }
    Polynomial reconstruct() const;
};
TwoPlanesTable decompose_two_planes(const Polynomial& F, size_t n);

struct CubicTwoPlanes {
    RationalMap third_point;  // parameter space (two projective blocks) -> X
    RationalMap inverse;      // X -> parameter space, the coordinate identity
    Polynomial s_coeff, t_coeff;
    bool dominant;
    VerifyReport certificate;
};
CubicTwoPlanes cubic_two_planes_param(const Hypersurface& X);

Point chord_third_point(const Hypersurface& C, const Point& p0, const Point& p);

struct ChordInvolution {
    RationalMap involution;
    VerifyReport certificate;
};
ChordInvolution chord_involution(const Hypersurface& C, const Point& p0);

struct FermatLines {
    std::vector<LinearSubspace> lines;
    bool partial;  // true when only the rational root -1 was available
};
FermatLines fermat_lines(uint32_t d, size_t n, FieldSpec field);
mpz_class fermat_line_count(uint32_t d, size_t n);
// d-th roots of -1 in F_p; requires 2d | p-1.
std::vector<FieldElement> roots_of_minus_one(uint32_t d, FieldSpec field);

// a[k][i][j] for the bilinear forms sum_{ij} a^k_{ij} x_i y_j.
using Tensor4 = std::vector<std::vector<std::vector<FieldElement>>>;

struct DeterminantalPair {
    Hypersurface XB, XC;       // quartic determinants
    RationalMap cramer;        // cubic cofactor coordinates, XB -> XC
    RationalMap cramer_back;   // XC -> XB
    VerifyReport certificate;
};
DeterminantalPair determinantal_pair(const Tensor4& a);

struct QuarticInvolution {
    RationalMap involution;
    Polynomial block1_cubic_part;   // bidegree (3,1) component
    Polynomial block2_cubic_part;   // bidegree (1,3) component
    VerifyReport certificate;
};
QuarticInvolution quartic_two_planes_involution(const Hypersurface& X);

// Determinant of a square matrix of polynomials (cofactor expansion).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

// Coordinate planes L1 = (x_0 = ... = x_n = 0) and L2 = (x_{n+1} = ... = 0)
// of P^{2n+1}.
LinearSubspace coordinate_plane_high(FieldSpec field, size_t n);  // spanned by e_{n+1}..e_{2n+1}
LinearSubspace coordinate_plane_low(FieldSpec field, size_t n);   // spanned by e_0..e_n

} // namespace hsurf

#endif
