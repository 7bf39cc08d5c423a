#ifndef HSURF_POLYNOMIAL_HPP
#define HSURF_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsurf/field.hpp"
#include "hsurf/monomial.hpp"

namespace hsurf {

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// strictly descending graded-lex order with no zero coefficients, so equal
// polynomials are bitwise-equal term lists.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        FieldElement coeff;
        bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
    };

    Polynomial(FieldSpec field, size_t nvars) : field_(field), nvars_(nvars) {}

    static Polynomial zero(FieldSpec field, size_t nvars) { return Polynomial(field, nvars); }
    static Polynomial constant(FieldSpec field, size_t nvars, const FieldElement& c);
    static Polynomial constant(FieldSpec field, size_t nvars, long c);
    static Polynomial variable(FieldSpec field, size_t nvars, size_t i, long coeff = 1);
    static Polynomial from_terms(FieldSpec field, size_t nvars, std::vector<Term> terms);

    const FieldSpec& field() const { return field_; }
    size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

    // -1 for the zero polynomial.
    int degree() const;
    int degree_in(size_t lo, size_t hi) const;
    // Degree in a single variable.
    int degree_in_var(size_t v) const;
    bool is_homogeneous() const;
    // Homogeneous in the variable block [lo, hi), other variables held constant.
    bool is_homogeneous_in(size_t lo, size_t hi) const;

    const Term& leading_term() const;
    const FieldElement& leading_coefficient() const { return leading_term().coeff; }
    FieldElement coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial pow(uint32_t e) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(size_t var) const;

    // Inserts a fresh homogenizing variable at `slot`; the result is
    // homogeneous of this polynomial's total degree.
    Polynomial homogenize(size_t slot) const;
    // Substitutes 1 for the variable at `slot` and removes it; input must be
    // homogeneous.
    Polynomial dehomogenize(size_t slot) const;

    // Substitutes args[i] for variable i; all args share a field and
    // variable count, which become those of the result.
    Polynomial substitute(const std::vector<Polynomial>& args) const;
    // Plugs field elements into all variables.
    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    // Divides the coefficients by the leading coefficient.
    Polynomial monic() const;

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;
    FieldSpec field_;
    size_t nvars_;
    std::vector<Term> terms_;  // descending grlex, nonzero coefficients
};

// Division with remainder by a single divisor under graded-lex order:
// f = quotient * h + remainder and no remainder term is divisible by the
// leading term of h. Since a single polynomial is a standard basis of the
// ideal it generates, remainder == 0 exactly when h divides f.
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const Polynomial& h);
bool divides(const Polynomial& f, const Polynomial& h);  // h | f
Polynomial exact_quotient(const Polynomial& f, const Polynomial& h);

// Monic greatest common divisor (primitive PRS for the multivariate part).
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial gcd_many(const std::vector<Polynomial>& polys);

} // namespace hsurf

#endif
