#ifndef HSURF_GEOM_HPP
#define HSURF_GEOM_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsurf/linalg.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf {

enum class Chart { Affine, Projective };

std::string chart_name(Chart c);

// A point of affine or projective space. Projective coordinates are stored in
// canonical form: within each block the first nonzero coordinate is scaled to
// 1, so equality is plain data comparison. Blocks model points of a product
// of projective spaces (coordinates concatenated); the default is one block.
class Point {
public:
    static Point affine(std::vector<FieldElement> coords);
    static Point projective(std::vector<FieldElement> coords);
    static Point projective_blocked(std::vector<FieldElement> coords, std::vector<size_t> blocks);

    Chart chart() const { return chart_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    size_t size() const { return coords_.size(); }
    const std::vector<size_t>& blocks() const { return blocks_; }

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Strict weak order for use in std::set (canonical data compare).
    bool operator<(const Point& o) const;

    std::string to_string() const;

private:
    Point(Chart c, FieldSpec f, std::vector<FieldElement> coords, std::vector<size_t> blocks)
        : chart_(c), field_(f), coords_(std::move(coords)), blocks_(std::move(blocks)) {}
    Chart chart_;
    FieldSpec field_;
    std::vector<FieldElement> coords_;
    std::vector<size_t> blocks_;
};

// Zero set of a single polynomial. A zero defining polynomial stands for the
// whole ambient space (used as the source/target of maps defined off nothing);
// "vanishes on the whole space" then means vanishing identically.
class Hypersurface {
public:
    static Hypersurface affine(Polynomial h);
    static Hypersurface projective(Polynomial H);
    static Hypersurface ambient_space(Chart chart, FieldSpec field, size_t nvars);

    Chart chart() const { return chart_; }
    const Polynomial& defining() const { return defining_; }
    const FieldSpec& field() const { return defining_.field(); }
    size_t nvars() const { return defining_.nvars(); }
    bool is_ambient_space() const { return defining_.is_zero(); }
    int degree() const { return defining_.degree(); }

private:
    Hypersurface(Chart c, Polynomial h) : chart_(c), defining_(std::move(h)) {}
    Chart chart_;
    Polynomial defining_;
};

// Linear subvariety of projective space, stored by a parametrization matrix
// of full column rank: parameters (s_0 : ... : s_m) map to ambient
// coordinates A * s.
class LinearSubspace {
public:
    explicit LinearSubspace(Matrix parametrization);

    const Matrix& parametrization() const { return param_; }
    size_t ambient_vars() const { return param_.rows(); }
    size_t param_vars() const { return param_.cols(); }
    const FieldSpec& field() const { return param_.field(); }

    // Linear forms cutting out the subspace (exact left null space of the
    // parametrization), computed on demand.
    std::vector<Polynomial> equations() const;
    Point image(const Point& parameter_point) const;
    // f(A * s) as a polynomial in the parameter variables.
    Polynomial pull_back(const Polynomial& f) const;

private:
    Matrix param_;
};

bool point_on(const Hypersurface& X, const Point& p);
std::vector<Polynomial> singular_locus_equations(const Hypersurface& X);
bool is_smooth_at(const Hypersurface& X, const Point& p);
Polynomial tangent_hyperplane(const Hypersurface& X, const Point& p);
bool contains_subspace(const Hypersurface& X, const LinearSubspace& L);
bool subspaces_disjoint(const LinearSubspace& L1, const LinearSubspace& L2);

// Finite-field point sampling: draws all coordinates but one, then solves the
// remaining univariate equation by exhaustive root scan. Requires p > 3.
std::optional<Point> random_point_on(const Hypersurface& X, size_t max_tries, std::mt19937_64& rng);

// Gradient of the defining polynomial at p (any representative).
std::vector<FieldElement> gradient_at(const Hypersurface& X, const Point& p);

} // namespace hsurf

#endif
