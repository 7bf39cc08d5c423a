#include "hsurf/geom.hpp"

#include <algorithm>

namespace hsurf {

std::string chart_name(Chart c) {
    return c == Chart::Affine ? "affine" : "projective";
}

namespace {

void check_point_field(const std::vector<FieldElement>& coords) {
    if (coords.empty()) throw IndexError("point needs at least one coordinate");
    for (const auto& c : coords)
        if (c.field() != coords[0].field()) throw MismatchError("point coordinate field mismatch");
}

} // namespace

Point Point::affine(std::vector<FieldElement> coords) {
    check_point_field(coords);
    FieldSpec f = coords[0].field();
    return Point(Chart::Affine, f, std::move(coords), {});
}

Point Point::projective(std::vector<FieldElement> coords) {
    check_point_field(coords);
    size_t n = coords.size();
    return projective_blocked(std::move(coords), {n});
}

Point Point::projective_blocked(std::vector<FieldElement> coords, std::vector<size_t> blocks) {
    check_point_field(coords);
    FieldSpec f = coords[0].field();
    if (blocks.empty()) blocks = {coords.size()};
    size_t total = 0;
    for (size_t b : blocks) total += b;
    if (total != coords.size()) throw MismatchError("point block lengths do not sum to coordinate count");
    size_t lo = 0;
    for (size_t b : blocks) {
        size_t nz = lo;
        while (nz < lo + b && coords[nz].is_zero()) ++nz;
        if (nz == lo + b) throw GeometryError("projective point has an all-zero coordinate block");
        FieldElement inv = coords[nz].inverse();
        for (size_t i = lo; i < lo + b; ++i) coords[i] *= inv;
        lo += b;
    }
    return Point(Chart::Projective, f, std::move(coords), std::move(blocks));
}

bool Point::operator==(const Point& o) const {
    return chart_ == o.chart_ && field_ == o.field_ && blocks_ == o.blocks_ && coords_ == o.coords_;
}

bool Point::operator<(const Point& o) const {
    if (coords_.size() != o.coords_.size()) return coords_.size() < o.coords_.size();
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == o.coords_[i]) continue;
        const auto& a = coords_[i];
        const auto& b = o.coords_[i];
        if (field_.is_rationals()) return a.rational() < b.rational();
        return a.residue() < b.residue();
    }
    return false;
}

std::string Point::to_string() const {
    std::string sep = chart_ == Chart::Affine ? ", " : " : ";
    std::string s;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += sep;
        s += coords_[i].to_string();
    }
    return s;
}

Hypersurface Hypersurface::affine(Polynomial h) {
    if (!h.is_zero() && h.degree() < 1)
        throw GeometryError("defining polynomial must have degree >= 1");
    return Hypersurface(Chart::Affine, std::move(h));
}

Hypersurface Hypersurface::projective(Polynomial H) {
    if (H.is_zero()) throw GeometryError("projective hypersurface needs a nonzero defining polynomial");
    if (!H.is_homogeneous()) throw HomogeneityError("projective hypersurface needs a homogeneous defining polynomial");
    if (H.degree() < 1) throw GeometryError("defining polynomial must have degree >= 1");
    return Hypersurface(Chart::Projective, std::move(H));
}

Hypersurface Hypersurface::ambient_space(Chart chart, FieldSpec field, size_t nvars) {
    return Hypersurface(chart, Polynomial::zero(field, nvars));
}

LinearSubspace::LinearSubspace(Matrix parametrization) : param_(std::move(parametrization)) {
    if (param_.cols() == 0 || param_.rows() < param_.cols())
        throw GeometryError("linear subspace parametrization has impossible shape");
    if (param_.rank() != param_.cols())
        throw GeometryError("linear subspace parametrization must have full column rank");
}

std::vector<Polynomial> LinearSubspace::equations() const {
    auto basis = param_.transpose().null_space();  // functionals vanishing on the column space
    std::vector<Polynomial> eqs;
    for (const auto& lam : basis) {
        Polynomial f = Polynomial::zero(field(), ambient_vars());
        for (size_t i = 0; i < lam.size(); ++i)
            if (!lam[i].is_zero()) f += Polynomial::variable(field(), ambient_vars(), i).scaled(lam[i]);
        eqs.push_back(std::move(f));
    }
    return eqs;
}

Point LinearSubspace::image(const Point& parameter_point) const {
    if (parameter_point.chart() != Chart::Projective) throw ChartError("subspace parameters are projective");
    return Point::projective(param_.apply(parameter_point.coords()));
}

Polynomial LinearSubspace::pull_back(const Polynomial& f) const {
    if (f.nvars() != ambient_vars()) throw MismatchError("pull_back: ambient dimension mismatch");
    std::vector<Polynomial> args;
    args.reserve(ambient_vars());
    for (size_t r = 0; r < ambient_vars(); ++r) {
        Polynomial row = Polynomial::zero(field(), param_vars());
        for (size_t c = 0; c < param_vars(); ++c)
            if (!param_.at(r, c).is_zero())
                row += Polynomial::variable(field(), param_vars(), c).scaled(param_.at(r, c));
        args.push_back(std::move(row));
    }
    return f.substitute(args);
}

namespace {

void check_point_matches(const Hypersurface& X, const Point& p) {
    if (p.chart() != X.chart())
        throw ChartError("point chart (" + chart_name(p.chart()) + ") does not match hypersurface chart (" +
                         chart_name(X.chart()) + ")");
    if (p.field() != X.field()) throw MismatchError("point field does not match hypersurface field");
    if (p.size() != X.nvars()) throw MismatchError("point coordinate count does not match ambient dimension");
}

} // namespace

bool point_on(const Hypersurface& X, const Point& p) {
    check_point_matches(X, p);
    return X.defining().evaluate(p.coords()).is_zero();
}

std::vector<Polynomial> singular_locus_equations(const Hypersurface& X) {
    if (X.is_ambient_space()) throw GeometryError("ambient space has no singular locus equations");
    std::vector<Polynomial> eqs;
    if (X.chart() == Chart::Affine) eqs.push_back(X.defining());
    for (size_t i = 0; i < X.nvars(); ++i) eqs.push_back(X.defining().derivative(i));
    return eqs;
}

std::vector<FieldElement> gradient_at(const Hypersurface& X, const Point& p) {
    check_point_matches(X, p);
    std::vector<FieldElement> g;
    g.reserve(X.nvars());
    for (size_t i = 0; i < X.nvars(); ++i) g.push_back(X.defining().derivative(i).evaluate(p.coords()));
    return g;
}

bool is_smooth_at(const Hypersurface& X, const Point& p) {
    if (X.is_ambient_space()) throw GeometryError("smoothness is about hypersurfaces, not the ambient space");
    if (!point_on(X, p)) throw GeometryError("is_smooth_at: point does not lie on the hypersurface");
    auto g = gradient_at(X, p);
    return std::any_of(g.begin(), g.end(), [](const FieldElement& c) { return !c.is_zero(); });
}

Polynomial tangent_hyperplane(const Hypersurface& X, const Point& p) {
    if (!is_smooth_at(X, p)) throw GeometryError("tangent_hyperplane: point is singular");
    auto g = gradient_at(X, p);
    Polynomial t = Polynomial::zero(X.field(), X.nvars());
    for (size_t i = 0; i < X.nvars(); ++i)
        if (!g[i].is_zero()) t += Polynomial::variable(X.field(), X.nvars(), i).scaled(g[i]);
    if (X.chart() == Chart::Affine) {
        FieldElement shift = FieldElement::zero(X.field());
        for (size_t i = 0; i < X.nvars(); ++i) shift += g[i] * p.coords()[i];
        t -= Polynomial::constant(X.field(), X.nvars(), shift);
    }
    return t;
}

bool contains_subspace(const Hypersurface& X, const LinearSubspace& L) {
    if (X.chart() != Chart::Projective) throw ChartError("contains_subspace expects a projective hypersurface");
    if (X.nvars() != L.ambient_vars()) throw MismatchError("contains_subspace: ambient dimension mismatch");
    if (X.field() != L.field()) throw MismatchError("contains_subspace: field mismatch");
    return L.pull_back(X.defining()).is_zero();
}

bool subspaces_disjoint(const LinearSubspace& L1, const LinearSubspace& L2) {
    if (L1.ambient_vars() != L2.ambient_vars()) throw MismatchError("subspaces_disjoint: ambient mismatch");
    if (L1.field() != L2.field()) throw MismatchError("subspaces_disjoint: field mismatch");
    Matrix stacked = L1.parametrization().augment(L2.parametrization());
    return stacked.rank() == L1.param_vars() + L2.param_vars();
}

std::optional<Point> random_point_on(const Hypersurface& X, size_t max_tries, std::mt19937_64& rng) {
    if (!X.field().is_prime())
        throw UnsupportedFieldError("random_point_on needs a finite field (enumeration over Q is unbounded)");
    uint32_t p = X.field().p();
    if (p <= 3) throw UnsupportedFieldError("random_point_on requires p > 3");
    if (X.is_ambient_space()) throw GeometryError("random_point_on: ambient space has no equation to solve");

    std::uniform_int_distribution<uint32_t> coord(0, p - 1);
    FieldSpec f = X.field();

    for (size_t attempt = 0; attempt < max_tries; ++attempt) {
        // projective: work in a random affine chart, then lift
        size_t chart = 0;
        Polynomial h = X.defining();
        if (X.chart() == Chart::Projective) {
            chart = std::uniform_int_distribution<size_t>(0, X.nvars() - 1)(rng);
            h = X.defining().dehomogenize(chart);
        }
        size_t k = h.nvars();
        if (k == 0) continue;  // dehomogenized to a constant
        size_t solve_var = std::uniform_int_distribution<size_t>(0, k - 1)(rng);

        std::vector<FieldElement> sample;
        std::vector<Polynomial> args;
        for (size_t i = 0; i < k; ++i) {
            if (i == solve_var) {
                args.push_back(Polynomial::variable(f, 1, 0));
                sample.push_back(FieldElement::zero(f));
            } else {
                FieldElement c(f, static_cast<long>(coord(rng)));
                sample.push_back(c);
                args.push_back(Polynomial::constant(f, 1, c));
            }
        }
        Polynomial uni = h.substitute(args);
        std::vector<FieldElement> roots;
        if (uni.is_zero()) {
            roots.push_back(FieldElement(f, static_cast<long>(coord(rng))));
        } else if (uni.is_constant()) {
            continue;
        } else {
            for (uint32_t t = 0; t < p; ++t) {
                FieldElement v(f, static_cast<long>(t));
                if (uni.evaluate({v}).is_zero()) roots.push_back(v);
            }
            if (roots.empty()) continue;
        }
        sample[solve_var] = roots[std::uniform_int_distribution<size_t>(0, roots.size() - 1)(rng)];

        if (X.chart() == Chart::Affine) return Point::affine(sample);
        std::vector<FieldElement> lifted = sample;
        lifted.insert(lifted.begin() + chart, FieldElement::one(f));
        return Point::projective(lifted);
    }
    return std::nullopt;
}

} // namespace hsurf
