#ifndef HSURF_MONOMIAL_HPP
#define HSURF_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hsurf {

// Exponent vector of fixed length (one slot per ambient variable).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) {}

    size_t nvars() const { return exps_.size(); }
    uint32_t exponent(size_t i) const { return exps_[i]; }
    uint32_t& exponent(size_t i) { return exps_[i]; }
    const std::vector<uint32_t>& exponents() const { return exps_; }

    uint32_t degree() const;
    // Total degree counting only the variables in [lo, hi).
    uint32_t degree_in(size_t lo, size_t hi) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Quotient o = this * result; only valid when divides(o).
    Monomial quotient_of(const Monomial& numerator) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    std::string to_string() const;

private:
    std::vector<uint32_t> exps_;
};

// Graded lexicographic order with variable 0 most significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

} // namespace hsurf

#endif
