#include "hsurf/random.hpp"

namespace hsurf {

FieldElement random_element(FieldSpec f, std::mt19937_64& rng, long rational_bound) {
    if (f.is_prime()) {
        std::uniform_int_distribution<long> d(0, static_cast<long>(f.p()) - 1);
        return FieldElement(f, d(rng));
    }
    std::uniform_int_distribution<long> num(-rational_bound, rational_bound);
    std::uniform_int_distribution<long> den(1, rational_bound);
    return FieldElement(f, mpq_class(num(rng), den(rng)));
}

FieldElement random_nonzero_element(FieldSpec f, std::mt19937_64& rng, long rational_bound) {
    for (;;) {
        FieldElement e = random_element(f, rng, rational_bound);
        if (!e.is_zero()) return e;
    }
}

Monomial random_monomial(size_t nvars, uint32_t degree, std::mt19937_64& rng) {
    Monomial m(nvars);
    std::uniform_int_distribution<size_t> var(0, nvars - 1);
    for (uint32_t k = 0; k < degree; ++k) ++m.exponent(var(rng));
    return m;
}

Polynomial random_polynomial(FieldSpec f, size_t nvars, uint32_t max_degree, size_t nterms,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> deg(0, max_degree);
    std::vector<Polynomial::Term> terms;
    for (size_t k = 0; k < nterms; ++k)
        terms.push_back({random_monomial(nvars, deg(rng), rng), random_element(f, rng)});
    return Polynomial::from_terms(f, nvars, std::move(terms));
}

Polynomial random_homogeneous(FieldSpec f, size_t nvars, uint32_t degree, size_t nterms,
                              std::mt19937_64& rng) {
    std::vector<Polynomial::Term> terms;
    for (size_t k = 0; k < nterms; ++k)
        terms.push_back({random_monomial(nvars, degree, rng), random_element(f, rng)});
    return Polynomial::from_terms(f, nvars, std::move(terms));
}

Polynomial random_homogeneous_nonzero(FieldSpec f, size_t nvars, uint32_t degree, size_t nterms,
                                      std::mt19937_64& rng) {
    for (;;) {
        Polynomial p = random_homogeneous(f, nvars, degree, nterms, rng);
        if (!p.is_zero()) return p;
    }
}

} // namespace hsurf
