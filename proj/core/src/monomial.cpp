#include "hsurf/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hsurf {

uint32_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

uint32_t Monomial::degree_in(size_t lo, size_t hi) const {
    uint32_t d = 0;
    for (size_t i = lo; i < hi && i < exps_.size(); ++i) d += exps_[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial out(*this);
    for (size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    assert(divides(numerator));
    Monomial out(numerator);
    for (size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
    return out;
}

std::string Monomial::to_string() const {
    std::string s;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
}

} // namespace hsurf
