#include "hsurf/enumerate.hpp"

#include <algorithm>
#include <set>

namespace hsurf {

namespace {

Hypersurface weighted_sphere(const std::vector<FieldElement>& a, FieldSpec f) {
    size_t n = a.size();
    Polynomial h = Polynomial::zero(f, n + 1);
    for (size_t i = 0; i < n; ++i) h += Polynomial::variable(f, n + 1, i).pow(2).scaled(a[i]);
    h += Polynomial::variable(f, n + 1, n).pow(2);
    h -= Polynomial::constant(f, n + 1, 1);
    return Hypersurface::affine(h);
}

void check_coefficients(const std::vector<FieldElement>& a) {
    if (a.empty()) throw IndexError("need at least one quadric coefficient");
    for (const auto& c : a) {
        if (c.field() != a[0].field()) throw MismatchError("coefficient field mismatch");
        if (c.is_zero()) throw GeometryError("zero quadric coefficient");
    }
}

// image of parameter y under the inverse stereographic formulas, or nothing
// when 1 + sum a_i y_i^2 vanishes
std::optional<Point> parametrize(const std::vector<FieldElement>& a, const std::vector<FieldElement>& y) {
    FieldSpec f = a[0].field();
    FieldElement sigma = FieldElement::zero(f);
    for (size_t i = 0; i < a.size(); ++i) sigma += a[i] * y[i] * y[i];
    FieldElement den = FieldElement::one(f) + sigma;
    if (den.is_zero()) return std::nullopt;
    std::vector<FieldElement> coords;
    FieldElement two(f, 2);
    for (size_t i = 0; i < a.size(); ++i) coords.push_back(two * y[i] / den);
    coords.push_back((FieldElement::one(f) - sigma) / den);
    return Point::affine(std::move(coords));
}

} // namespace

QuadricPointEnumeration enum_rational_points(const std::vector<mpq_class>& a_in, unsigned height) {
    if (height < 1) throw IndexError("height bound must be >= 1");
    FieldSpec f = FieldSpec::rationals();
    std::vector<FieldElement> a;
    for (const auto& q : a_in) a.emplace_back(f, q);
    check_coefficients(a);
    const size_t n = a.size();

    // all reduced fractions with max(|num|, den) <= height, ascending
    std::vector<FieldElement> values;
    for (long den = 1; den <= static_cast<long>(height); ++den)
        for (long num = -static_cast<long>(height); num <= static_cast<long>(height); ++num) {
            mpq_class q(num, den);
            q.canonicalize();
            if (q.get_den() != den) continue;  // not reduced: already seen
            values.emplace_back(f, q);
        }
    std::sort(values.begin(), values.end(), [](const FieldElement& x, const FieldElement& y) {
        return x.rational() < y.rational();
    });

    QuadricPointEnumeration out{weighted_sphere(a, f), {}, {}};
    std::set<Point> seen;
    std::vector<size_t> idx(n, 0);
    std::vector<FieldElement> y(n, FieldElement::zero(f));
    for (;;) {
        for (size_t i = 0; i < n; ++i) y[i] = values[idx[i]];
        if (auto pt = parametrize(a, y)) {
            if (seen.insert(*pt).second) out.parametrized.push_back(*pt);
        }
        // lexicographic order: last coordinate fastest
        size_t pos = n;
        while (pos > 0 && ++idx[pos - 1] == values.size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }

    std::vector<FieldElement> pole(n, FieldElement::zero(f));
    pole.push_back(FieldElement(f, -1l));
    out.excluded.push_back(Point::affine(std::move(pole)));
    return out;
}

QuadricPointEnumeration enum_quadric_points_mod_p(const std::vector<FieldElement>& a) {
    check_coefficients(a);
    FieldSpec f = a[0].field();
    if (!f.is_prime()) throw UnsupportedFieldError("enum_quadric_points_mod_p needs a prime field");
    if (f.p() <= 3) throw UnsupportedFieldError("enum_quadric_points_mod_p requires p > 3");
    const size_t n = a.size();
    const uint32_t p = f.p();

    QuadricPointEnumeration out{weighted_sphere(a, f), {}, {}};
    std::set<Point> seen;
    std::vector<uint32_t> y(n, 0);
    for (;;) {
        std::vector<FieldElement> yv;
        for (uint32_t v : y) yv.emplace_back(f, static_cast<long>(v));
        if (auto pt = parametrize(a, yv)) {
            if (seen.insert(*pt).second) out.parametrized.push_back(*pt);
        }
        size_t pos = n;
        while (pos > 0 && ++y[pos - 1] == p) {
            y[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }

    // excluded slice x_{n+1} = -1: brute force sum a_i x_i^2 = 0
    std::vector<uint32_t> x(n, 0);
    for (;;) {
        FieldElement acc = FieldElement::zero(f);
        for (size_t i = 0; i < n; ++i) {
            FieldElement xi(f, static_cast<long>(x[i]));
            acc += a[i] * xi * xi;
        }
        if (acc.is_zero()) {
            std::vector<FieldElement> coords;
            for (uint32_t v : x) coords.emplace_back(f, static_cast<long>(v));
            coords.emplace_back(f, -1l);
            out.excluded.push_back(Point::affine(std::move(coords)));
        }
        size_t pos = n;
        while (pos > 0 && ++x[pos - 1] == p) {
            x[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

std::vector<Point> brute_force_quadric_points(const std::vector<FieldElement>& a) {
    check_coefficients(a);
    FieldSpec f = a[0].field();
    if (!f.is_prime()) throw UnsupportedFieldError("brute force enumeration needs a prime field");
    const size_t m = a.size() + 1;
    const uint32_t p = f.p();
    Hypersurface Q = weighted_sphere(a, f);

    std::vector<Point> pts;
    std::vector<uint32_t> x(m, 0);
    for (;;) {
        std::vector<FieldElement> coords;
        for (uint32_t v : x) coords.emplace_back(f, static_cast<long>(v));
        Point pt = Point::affine(std::move(coords));
        if (point_on(Q, pt)) pts.push_back(std::move(pt));
        size_t pos = m;
        while (pos > 0 && ++x[pos - 1] == p) {
            x[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return pts;
}

} // namespace hsurf
