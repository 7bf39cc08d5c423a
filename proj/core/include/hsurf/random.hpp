#ifndef HSURF_RANDOM_HPP
#define HSURF_RANDOM_HPP

#include <random>

#include "hsurf/polynomial.hpp"

namespace hsurf {

// Seeded helpers for randomized checks; callers own the generator so parallel
// runs stay reproducible.

FieldElement random_element(FieldSpec f, std::mt19937_64& rng, long rational_bound = 9);
FieldElement random_nonzero_element(FieldSpec f, std::mt19937_64& rng, long rational_bound = 9);

Monomial random_monomial(size_t nvars, uint32_t degree, std::mt19937_64& rng);

Polynomial random_polynomial(FieldSpec f, size_t nvars, uint32_t max_degree, size_t nterms,
                             std::mt19937_64& rng);
Polynomial random_homogeneous(FieldSpec f, size_t nvars, uint32_t degree, size_t nterms,
                              std::mt19937_64& rng);
// Nonzero random homogeneous polynomial (resamples until some term survives).
Polynomial random_homogeneous_nonzero(FieldSpec f, size_t nvars, uint32_t degree, size_t nterms,
                                      std::mt19937_64& rng);

} // namespace hsurf

#endif
