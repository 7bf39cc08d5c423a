#ifndef HSURF_ENUMERATE_HPP
#define HSURF_ENUMERATE_HPP

#include <vector>

#include <gmpxx.h>

#include "hsurf/geom.hpp"

namespace hsurf {

// Solutions of a_1 x_1^2 + ... + a_n x_n^2 + x_{n+1}^2 = 1 obtained through
// the inverse stereographic parametrization.
struct QuadricPointEnumeration {
    Hypersurface quadric;
    // image of the parametrization, deduplicated, in deterministic order
    std::vector<Point> parametrized;
    // known solutions off the parametrization: over Q just the south pole,
    // over F_p the full x_{n+1} = -1 slice found by brute force
    std::vector<Point> excluded;
};

// Over Q: parameters run over all y in Q^n with max(|numerator|, denominator)
// of every coordinate bounded by `height`, in lexicographic order with each
// coordinate ascending. Parameters with 1 + sum a_i y_i^2 = 0 are skipped.
QuadricPointEnumeration enum_rational_points(const std::vector<mpq_class>& a, unsigned height);

// Over F_p (p > 3): parameters run over all of F_p^n.
QuadricPointEnumeration enum_quadric_points_mod_p(const std::vector<FieldElement>& a);

// Brute-force solution set of the quadric equation over F_p (oracle-grade).
std::vector<Point> brute_force_quadric_points(const std::vector<FieldElement>& a);

} // namespace hsurf

#endif
