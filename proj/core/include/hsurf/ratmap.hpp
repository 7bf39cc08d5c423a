#ifndef HSURF_RATMAP_HPP
#define HSURF_RATMAP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsurf/geom.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf {

// Quotient of polynomials kept reduced: gcd(num, den) = 1, den monic, zero
// is 0/1.
class RationalFunction {
public:
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);
    static RationalFunction zero(FieldSpec f, size_t nvars);
    static RationalFunction one(FieldSpec f, size_t nvars);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const FieldSpec& field() const { return num_.field(); }
    size_t nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::optional<FieldElement> evaluate(const std::vector<FieldElement>& point) const;
    std::string to_string() const;

private:
    Polynomial num_, den_;
};

// Rational map between affine/projective spaces, stored through its canonical
// cleared form: a tuple of polynomials with tuple gcd 1 and the first nonzero
// coordinate monic. For an affine target of t coordinates the form has t+1
// entries whose last is the common denominator; for a projective target of
// t+1 homogeneous coordinates the form has t+1 entries.
//
// Source/target blocks model maps into or out of a product of projective
// spaces by concatenated coordinates: source_blocks partitions the source
// variables, target_blocks partitions the form entries. Defaults are a single
// block; affine sides ignore blocks.
class RationalMap {
public:
    Chart source_chart() const { return source_chart_; }
    Chart target_chart() const { return target_chart_; }
    size_t source_vars() const { return source_vars_; }
    size_t target_coords() const {
        return target_chart_ == Chart::Affine ? form_.size() - 1 : form_.size();
    }
    const std::vector<Polynomial>& form() const { return form_; }
    const FieldSpec& field() const { return form_.front().field(); }
    const std::vector<size_t>& source_blocks() const { return source_blocks_; }
    const std::vector<size_t>& target_blocks() const { return target_blocks_; }

    // Affine view of an affine-target map: coordinate i as form[i]/form[last].
    std::vector<RationalFunction> affine_coords() const;

    static RationalMap identity(Chart chart, size_t nvars, FieldSpec field,
                                std::vector<size_t> blocks = {});
    // Canonicalizes a raw polynomial tuple.
    static RationalMap from_form(Chart source_chart, size_t source_vars, Chart target_chart,
                                 std::vector<Polynomial> form, std::vector<size_t> source_blocks = {},
                                 std::vector<size_t> target_blocks = {});

    bool operator==(const RationalMap& o) const;
    bool operator!=(const RationalMap& o) const { return !(*this == o); }

    // Canonical-form evaluation; nullopt means Undefined. Note that a map can
    // be defined at a point through a non-canonical representation that this
    // evaluation does not search for (the canonical tuple is the only one
    // consulted).
    std::optional<Point> evaluate(const Point& p) const;

    std::string describe() const;

private:
    RationalMap() = default;
    friend RationalMap normalize(std::vector<RationalFunction>, Chart, Chart, std::vector<size_t>,
                                 std::vector<size_t>);
    Chart source_chart_ = Chart::Affine;
    Chart target_chart_ = Chart::Affine;
    size_t source_vars_ = 0;
    std::vector<Polynomial> form_;
    std::vector<size_t> source_blocks_, target_blocks_;
};

// Builds the canonical representative from raw coordinate functions: clears
// denominators to the least common denominator, divides out the tuple gcd and
// scales the first nonzero coordinate monic.
RationalMap normalize(std::vector<RationalFunction> coords, Chart source_chart, Chart target_chart,
                      std::vector<size_t> source_blocks = {}, std::vector<size_t> target_blocks = {});

// compose(F, G) = F after G (substitutes G's coordinates into F's).
RationalMap compose(const RationalMap& F, const RationalMap& G);

// One divisibility certificate: ok means divisor | dividend with the stated
// quotient, otherwise residual holds the nonzero remainder.
struct CertCheck {
    std::string name;
    bool ok = false;
    std::optional<Polynomial> quotient;
    std::optional<Polynomial> residual;
    std::string note;
};

struct RestrictionCertificate {
    bool ok = false;
    CertCheck check;
};

// Does F map X into Y? Substitutes F into Y's defining polynomial, reduces,
// and tests divisibility by X's defining polynomial (exact vanishing when X
// is the ambient space). Throws GeometryError when F is undefined along all
// of X.
RestrictionCertificate restricts_to_certified(const RationalMap& F, const Hypersurface& X,
                                              const Hypersurface& Y);
bool restricts_to(const RationalMap& F, const Hypersurface& X, const Hypersurface& Y);

struct VerifyReport {
    bool certified = false;
    std::vector<CertCheck> checks;
    std::string failure;  // human summary when not certified

    void add(CertCheck c);
};

// Certified birationality check: F and G must restrict (X -> Y, Y -> X) and
// both round trips must be the identity modulo the respective defining
// polynomials. Every divisibility is recorded with its quotient so the
// verdict can be re-verified independently.
VerifyReport verify_birational(const RationalMap& F, const RationalMap& G, const Hypersurface& X,
                               const Hypersurface& Y);

// Pairs (form_i, form_j) whose common zeros contain the indeterminacy locus
// of the canonical representative.
std::vector<std::pair<Polynomial, Polynomial>> indeterminacy_equations(const RationalMap& F);

// h | f with the convention that only 0 is divisible by 0.
bool divides_mod(const Polynomial& f, const Polynomial& h);

} // namespace hsurf

#endif
