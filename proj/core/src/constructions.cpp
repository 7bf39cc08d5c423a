#include "hsurf/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace hsurf {

namespace {

// Rebuilds f in a ring with extra trailing variables.
Polynomial embed(const Polynomial& f, size_t new_nvars) {
    if (new_nvars < f.nvars()) throw MismatchError("embed cannot shrink the ring");
    if (new_nvars == f.nvars()) return f;
    std::vector<Polynomial> args;
    for (size_t i = 0; i < f.nvars(); ++i)
        args.push_back(Polynomial::variable(f.field(), new_nvars, i));
    return f.substitute(args);
}

CertCheck bool_check(std::string name, bool ok, std::string note = "") {
    CertCheck c;
    c.name = std::move(name);
    c.ok = ok;
    c.note = std::move(note);
    return c;
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = acc * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return acc;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        fs.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

uint64_t primitive_root(uint64_t p) {
    auto fs = prime_factors(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : fs)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw FieldError("no primitive root found (modulus not prime?)");
}

} // namespace

SphereParametrization sphere_stereographic(size_t n, const std::vector<FieldElement>& a) {
    if (n < 1) throw IndexError("sphere_stereographic needs n >= 1");
    if (a.size() != n) throw MismatchError("expected " + std::to_string(n) + " quadric coefficients");
    FieldSpec f = a[0].field();
    for (const auto& c : a) {
        if (c.field() != f) throw MismatchError("coefficient field mismatch");
        if (c.is_zero()) throw GeometryError("sphere_stereographic: zero quadric coefficient");
    }

    const size_t m = n + 1;  // source ambient variables
    // a1*x0^2 + ... + an*x_{n-1}^2 + x_n^2 - 1
    Polynomial h = Polynomial::zero(f, m);
    for (size_t i = 0; i < n; ++i)
        h += Polynomial::variable(f, m, i).pow(2).scaled(a[i]);
    h += Polynomial::variable(f, m, n).pow(2);
    h -= Polynomial::constant(f, m, 1);
    Hypersurface source = Hypersurface::affine(h);
    Hypersurface target = Hypersurface::ambient_space(Chart::Affine, f, n);

    // forward: x_i / (1 + x_n)
    Polynomial den_fwd = Polynomial::constant(f, m, 1) + Polynomial::variable(f, m, n);
    std::vector<RationalFunction> fwd;
    for (size_t i = 0; i < n; ++i) fwd.emplace_back(Polynomial::variable(f, m, i), den_fwd);
    RationalMap forward = normalize(std::move(fwd), Chart::Affine, Chart::Affine);

    // inverse: (2 y_i / (1 + S), (1 - S) / (1 + S)) with S = sum a_i y_i^2
    Polynomial S = Polynomial::zero(f, n);
    for (size_t i = 0; i < n; ++i) S += Polynomial::variable(f, n, i).pow(2).scaled(a[i]);
    Polynomial one_n = Polynomial::constant(f, n, 1);
    std::vector<RationalFunction> inv;
    for (size_t i = 0; i < n; ++i)
        inv.emplace_back(Polynomial::variable(f, n, i).scaled(FieldElement(f, 2)), one_n + S);
    inv.emplace_back(one_n - S, one_n + S);
    RationalMap inverse = normalize(std::move(inv), Chart::Affine, Chart::Affine);

    VerifyReport cert = verify_birational(forward, inverse, source, target);
    return {std::move(source), std::move(target), std::move(forward), std::move(inverse), std::move(cert)};
}

QuadricProjection quadric_projection(const Hypersurface& Q, const Point& p, const LinearSubspace& H) {
    if (Q.chart() != Chart::Projective) throw ChartError("quadric_projection expects a projective quadric");
    if (Q.degree() != 2) throw GeometryError("quadric_projection expects degree 2");
    const size_t N = Q.nvars();
    if (H.ambient_vars() != N || H.param_vars() != N - 1)
        throw GeometryError("H must be a hyperplane of the ambient projective space");
    if (H.field() != Q.field() || p.field() != Q.field()) throw MismatchError("field mismatch");
    if (!point_on(Q, p)) throw GeometryError("projection center does not lie on the quadric");
    if (!is_smooth_at(Q, p)) throw GeometryError("projection center is a singular point of the quadric");

    FieldSpec f = Q.field();
    auto eqs = H.equations();
    if (eqs.size() != 1) throw GeometryError("H parametrization does not cut out a hyperplane");
    const Polynomial& lam = eqs[0];
    FieldElement lam_p = lam.evaluate(p.coords());
    if (lam_p.is_zero()) throw GeometryError("projection center lies on the target hyperplane");

    // forward: x -> parameters of lambda(x) p - lambda(p) x
    Matrix L = H.parametrization().left_inverse();
    std::vector<Polynomial> w;  // ambient coordinates of the projected point
    for (size_t r = 0; r < N; ++r) {
        Polynomial wr = lam.scaled(p.coords()[r]) - Polynomial::variable(f, N, r).scaled(lam_p);
        w.push_back(std::move(wr));
    }
    std::vector<Polynomial> fwd;
    for (size_t c = 0; c < N - 1; ++c) {
        Polynomial s = Polynomial::zero(f, N);
        for (size_t r = 0; r < N; ++r)
            if (!L.at(c, r).is_zero()) s += w[r].scaled(L.at(c, r));
        fwd.push_back(std::move(s));
    }
    RationalMap forward = RationalMap::from_form(Chart::Projective, N, Chart::Projective, std::move(fwd));

    // inverse: s -> G(y) p - B(p, y) y with y = A s
    std::vector<Polynomial> y;
    for (size_t r = 0; r < N; ++r) {
        Polynomial yr = Polynomial::zero(f, N - 1);
        for (size_t c = 0; c + 1 < N; ++c)
            if (!H.parametrization().at(r, c).is_zero())
                yr += Polynomial::variable(f, N - 1, c).scaled(H.parametrization().at(r, c));
        y.push_back(std::move(yr));
    }
    Polynomial Gy = Q.defining().substitute(y);
    std::vector<Polynomial> p_plus_y;
    for (size_t r = 0; r < N; ++r)
        p_plus_y.push_back(y[r] + Polynomial::constant(f, N - 1, p.coords()[r]));
    Polynomial B = Q.defining().substitute(p_plus_y) - Gy;  // G(p) = 0
    std::vector<Polynomial> inv;
    for (size_t r = 0; r < N; ++r) inv.push_back(Gy.scaled(p.coords()[r]) - B * y[r]);
    RationalMap inverse = RationalMap::from_form(Chart::Projective, N - 1, Chart::Projective, std::move(inv));

    Hypersurface target = Hypersurface::ambient_space(Chart::Projective, f, N - 1);
    VerifyReport cert = verify_birational(forward, inverse, Q, target);
    return {std::move(forward), std::move(inverse), std::move(target), std::move(cert)};
}

MonoidParametrization monoid_param(const Polynomial& H_low, const Polynomial& H_high) {
    if (H_low.field() != H_high.field() || H_low.nvars() != H_high.nvars())
        throw MismatchError("monoid_param: ring mismatch");
    if (H_low.is_zero()) throw GeometryError("monoid_param: H_low must be nonzero");
    if (!H_low.is_homogeneous() || !H_high.is_homogeneous())
        throw HomogeneityError("monoid_param expects homogeneous inputs");
    if (H_high.is_zero() || H_high.degree() != H_low.degree() + 1)
        throw HomogeneityError("monoid_param: deg H_high must be deg H_low + 1");
    if (!gcd(H_low, H_high).is_constant())
        throw GeometryError("monoid_param: H_low and H_high share a common factor");

    FieldSpec f = H_low.field();
    const size_t k = H_low.nvars();  // x0..xn, k = n+1
    const size_t N = k + 1;

    Polynomial X_def = embed(H_low, N) * Polynomial::variable(f, N, k) + embed(H_high, N);
    Hypersurface X = Hypersurface::projective(X_def);

    std::vector<Polynomial> fwd;
    for (size_t i = 0; i < k; ++i) fwd.push_back(Polynomial::variable(f, N, i));
    RationalMap forward = RationalMap::from_form(Chart::Projective, N, Chart::Projective, std::move(fwd));

    std::vector<Polynomial> inv;
    for (size_t i = 0; i < k; ++i) inv.push_back(Polynomial::variable(f, k, i) * H_low);
    inv.push_back(-H_high);
    RationalMap inverse = RationalMap::from_form(Chart::Projective, k, Chart::Projective, std::move(inv));

    Hypersurface target = Hypersurface::ambient_space(Chart::Projective, f, k);
    VerifyReport cert = verify_birational(forward, inverse, X, target);
    return {std::move(X), std::move(forward), std::move(inverse), std::move(cert)};
}

Polynomial TwoPlanesTable::reconstruct() const {
    const size_t nv = 2 * n + 2;
    const Polynomial& probe = entries[0][0];
    Polynomial acc = Polynomial::zero(probe.field(), nv);
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = n + 1; j < nv; ++j)
            acc += at(i, j) * Polynomial::variable(probe.field(), nv, i) *
                   Polynomial::variable(probe.field(), nv, j);
    return acc;
}

TwoPlanesTable decompose_two_planes(const Polynomial& F, size_t n) {
    const size_t nv = 2 * n + 2;
    if (F.nvars() != nv) throw MismatchError("decompose_two_planes: expected " + std::to_string(nv) + " variables");
    if (F.is_zero() || !F.is_homogeneous() || F.degree() != 3)
        throw HomogeneityError("decompose_two_planes handles homogeneous cubics");

    TwoPlanesTable table;
    table.n = n;
    table.entries.assign(n + 1, std::vector<Polynomial>(n + 1, Polynomial::zero(F.field(), nv)));

    for (const auto& t : F.terms()) {
        uint32_t d1 = t.mono.degree_in(0, n + 1);
        uint32_t d2 = t.mono.degree_in(n + 1, nv);
        if (d1 == 0)
            throw GeometryError("cubic does not vanish on L1: witness monomial " + t.mono.to_string());
        if (d2 == 0)
            throw GeometryError("cubic does not vanish on L2: witness monomial " + t.mono.to_string());
        size_t i = 0;
        while (t.mono.exponent(i) == 0) ++i;
        size_t j = n + 1;
        while (t.mono.exponent(j) == 0) ++j;
        Monomial rest = t.mono;
        rest.exponent(i) -= 1;
        rest.exponent(j) -= 1;
        table.entries[i][j - (n + 1)] +=
            Polynomial::from_terms(F.field(), nv, {{rest, t.coeff}});
    }
    return table;
}

LinearSubspace coordinate_plane_low(FieldSpec field, size_t n) {
    const size_t nv = 2 * n + 2;
    Matrix A(field, nv, n + 1);
    for (size_t c = 0; c <= n; ++c) A.at(c, c) = FieldElement::one(field);
    return LinearSubspace(std::move(A));
}

LinearSubspace coordinate_plane_high(FieldSpec field, size_t n) {
    const size_t nv = 2 * n + 2;
    Matrix A(field, nv, n + 1);
    for (size_t c = 0; c <= n; ++c) A.at(n + 1 + c, c) = FieldElement::one(field);
    return LinearSubspace(std::move(A));
}

CubicTwoPlanes cubic_two_planes_param(const Hypersurface& X) {
    if (X.chart() != Chart::Projective) throw ChartError("cubic_two_planes_param expects a projective cubic");
    const size_t nv = X.nvars();
    if (nv < 4 || nv % 2 != 0) throw MismatchError("ambient space must be P^{2n+1}");
    const size_t n = nv / 2 - 1;
    if (X.degree() != 3) throw GeometryError("cubic_two_planes_param expects degree 3");
    FieldSpec f = X.field();

    bool on_l1 = contains_subspace(X, coordinate_plane_high(f, n));
    bool on_l2 = contains_subspace(X, coordinate_plane_low(f, n));
    if (!on_l1 || !on_l2)
        throw GeometryError("cubic does not contain both coordinate n-planes");

    TwoPlanesTable table = decompose_two_planes(X.defining(), n);

    // substitutions zeroing one block
    std::vector<Polynomial> kill1, kill2;
    for (size_t i = 0; i < nv; ++i) {
        kill1.push_back(i <= n ? Polynomial::zero(f, nv) : Polynomial::variable(f, nv, i));
        kill2.push_back(i <= n ? Polynomial::variable(f, nv, i) : Polynomial::zero(f, nv));
    }

    Polynomial s_coeff = Polynomial::zero(f, nv);
    Polynomial t_coeff = Polynomial::zero(f, nv);
    for (size_t i = 0; i <= n; ++i) {
        for (size_t j = n + 1; j < nv; ++j) {
            Polynomial xixj = Polynomial::variable(f, nv, i) * Polynomial::variable(f, nv, j);
            s_coeff -= table.at(i, j).substitute(kill1) * xixj;
            t_coeff += table.at(i, j).substitute(kill2) * xixj;
        }
    }

    bool dominant = !s_coeff.is_zero() && !t_coeff.is_zero();

    std::vector<Polynomial> fwd;
    for (size_t i = 0; i < nv; ++i)
        fwd.push_back((i <= n ? s_coeff : t_coeff) * Polynomial::variable(f, nv, i));
    RationalMap third_point = RationalMap::from_form(Chart::Projective, nv, Chart::Projective,
                                                     std::move(fwd), {n + 1, n + 1}, {});

    std::vector<Polynomial> idf;
    for (size_t i = 0; i < nv; ++i) idf.push_back(Polynomial::variable(f, nv, i));
    RationalMap inverse = RationalMap::from_form(Chart::Projective, nv, Chart::Projective, std::move(idf),
                                                 {}, {n + 1, n + 1});

    VerifyReport cert;
    cert.add(bool_check("X contains L1", on_l1));
    cert.add(bool_check("X contains L2", on_l2));

    // the line substitution identity: F(s*a-block, t*b-block) is divisible by s*t
    {
        const size_t big = nv + 2;  // extra s, t
        std::vector<Polynomial> args;
        for (size_t i = 0; i < nv; ++i)
            args.push_back(Polynomial::variable(f, big, i) * Polynomial::variable(f, big, i <= n ? nv : nv + 1));
        Polynomial sub = X.defining().substitute(args);
        Polynomial st = Polynomial::variable(f, big, nv) * Polynomial::variable(f, big, nv + 1);
        auto dr = divide(sub, st);
        CertCheck c;
        c.name = "line substitution divisible by s*t";
        c.ok = dr.remainder.is_zero();
        if (c.ok)
            c.quotient = dr.quotient;
        else
            c.residual = dr.remainder;
        cert.add(std::move(c));
    }

    cert.add(bool_check("third-point map dominant", dominant,
                        dominant ? "" : "map not dominant: a coordinate block is identically zero"));

    if (dominant) {
        Hypersurface param_space = Hypersurface::ambient_space(Chart::Projective, f, nv);
        VerifyReport vb = verify_birational(third_point, inverse, param_space, X);
        for (auto& c : vb.checks) cert.add(std::move(c));
    }
    cert.certified = std::all_of(cert.checks.begin(), cert.checks.end(),
                                 [](const CertCheck& c) { return c.ok; });
    return {std::move(third_point), std::move(inverse), std::move(s_coeff), std::move(t_coeff), dominant,
            std::move(cert)};
}

namespace {

// coefficient of mu^emu * nu^env in a polynomial over vars (x..., mu, nu),
// written back into the x-ring
Polynomial coeff_mu_nu(const Polynomial& f, uint32_t emu, uint32_t env) {
    const size_t nv = f.nvars();
    std::vector<Polynomial::Term> ts;
    for (const auto& t : f.terms()) {
        if (t.mono.exponent(nv - 2) != emu || t.mono.exponent(nv - 1) != env) continue;
        std::vector<uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().end() - 2);
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(f.field(), nv - 2, std::move(ts));
}

} // namespace

Point chord_third_point(const Hypersurface& C, const Point& p0, const Point& p) {
    if (C.chart() != Chart::Projective || C.nvars() != 3 || C.degree() != 3)
        throw GeometryError("chord_third_point expects a plane projective cubic");
    if (!point_on(C, p0) || !point_on(C, p)) throw GeometryError("chord points must lie on the cubic");
    if (p0 == p) throw GeometryError("chord_third_point needs two distinct points");
    FieldSpec f = C.field();

    // binary cubic C(mu p0 + nu p); known roots mu = 0 and nu = 0
    std::vector<Polynomial> args;
    for (size_t r = 0; r < 3; ++r)
        args.push_back(Polynomial::variable(f, 2, 0).scaled(p0.coords()[r]) +
                       Polynomial::variable(f, 2, 1).scaled(p.coords()[r]));
    Polynomial bin = C.defining().substitute(args);
    if (bin.is_zero()) throw GeometryError("chord line is contained in the cubic");
    Polynomial lin = exact_quotient(exact_quotient(bin, Polynomial::variable(f, 2, 0)),
                                    Polynomial::variable(f, 2, 1));
    // lin = c21 * mu + c12 * nu; third root (mu : nu) = (c12 : -c21)
    FieldElement c21 = lin.coefficient(Monomial(std::vector<uint32_t>{1, 0}));
    FieldElement c12 = lin.coefficient(Monomial(std::vector<uint32_t>{0, 1}));
    std::vector<FieldElement> coords;
    for (size_t r = 0; r < 3; ++r) coords.push_back(c12 * p0.coords()[r] - c21 * p.coords()[r]);
    return Point::projective(std::move(coords));
}

ChordInvolution chord_involution(const Hypersurface& C, const Point& p0) {
    if (C.chart() != Chart::Projective || C.nvars() != 3 || C.degree() != 3)
        throw GeometryError("chord_involution expects a plane projective cubic");
    if (!point_on(C, p0)) throw GeometryError("base point must lie on the cubic");
    FieldSpec f = C.field();

    // symbolic point x; ring (x0, x1, x2, mu, nu)
    const size_t big = 5;
    std::vector<Polynomial> args;
    for (size_t r = 0; r < 3; ++r)
        args.push_back(Polynomial::variable(f, big, 3).scaled(p0.coords()[r]) +
                       Polynomial::variable(f, big, 4) * Polynomial::variable(f, big, r));
    Polynomial bin = C.defining().substitute(args);
    // C(p0) = 0 kills the mu^3 term, so nu divides exactly
    Polynomial q = exact_quotient(bin, Polynomial::variable(f, big, 4));
    Polynomial c21 = coeff_mu_nu(q, 2, 0);  // linear in x
    Polynomial c12 = coeff_mu_nu(q, 1, 1);  // quadratic in x

    std::vector<Polynomial> form;
    for (size_t r = 0; r < 3; ++r)
        form.push_back(c12.scaled(p0.coords()[r]) - c21 * Polynomial::variable(f, 3, r));
    RationalMap tau = RationalMap::from_form(Chart::Projective, 3, Chart::Projective, std::move(form));
    VerifyReport cert = verify_birational(tau, tau, C, C);
    return {std::move(tau), std::move(cert)};
}

std::vector<FieldElement> roots_of_minus_one(uint32_t d, FieldSpec field) {
    if (d < 1) throw IndexError("roots_of_minus_one needs d >= 1");
    if (field.is_rationals()) {
        if (d % 2 == 0)
            throw UnsupportedFieldError("-1 has no d-th root in Q for even d");
        return {FieldElement(field, -1l)};
    }
    uint64_t p = field.p();
    if ((p - 1) % (2ull * d) != 0)
        throw UnsupportedFieldError("F" + std::to_string(p) + " lacks d-th roots of -1: need 2d | p-1 (d = " +
                                    std::to_string(d) + ")");
    uint64_t g = primitive_root(p);
    uint64_t e = (p - 1) / (2ull * d);
    std::vector<FieldElement> roots;
    for (uint32_t k = 0; k < d; ++k)
        roots.push_back(FieldElement(field, static_cast<long>(powmod(g, e * (2ull * k + 1), p))));
    return roots;
}

mpz_class fermat_line_count(uint32_t d, size_t n) {
    mpz_class fact, half_fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * n + 2));
    mpz_fac_ui(half_fact.get_mpz_t(), static_cast<unsigned long>(n + 1));
    mpz_class dpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), d, static_cast<unsigned long>(n + 1));
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    return dpow * fact / (two_pow * half_fact);
}

namespace {

void enumerate_pairings(std::vector<size_t>& pool, std::vector<std::pair<size_t, size_t>>& current,
                        std::vector<std::vector<std::pair<size_t, size_t>>>& out) {
    if (pool.empty()) {
        out.push_back(current);
        return;
    }
    size_t first = pool.front();
    for (size_t k = 1; k < pool.size(); ++k) {
        size_t partner = pool[k];
        std::vector<size_t> rest;
        for (size_t i = 1; i < pool.size(); ++i)
            if (i != k) rest.push_back(pool[i]);
        current.emplace_back(first, partner);
        enumerate_pairings(rest, current, out);
        current.pop_back();
    }
}

} // namespace

FermatLines fermat_lines(uint32_t d, size_t n, FieldSpec field) {
    auto roots = roots_of_minus_one(d, field);
    bool partial = field.is_rationals() && d > 1;

    const size_t nv = 2 * n + 2;
    std::vector<size_t> indices(nv);
    std::iota(indices.begin(), indices.end(), 0);
    std::vector<std::vector<std::pair<size_t, size_t>>> pairings;
    std::vector<std::pair<size_t, size_t>> scratch;
    enumerate_pairings(indices, scratch, pairings);

    FermatLines out;
    out.partial = partial;
    std::vector<size_t> pick(n + 1, 0);
    for (const auto& pairing : pairings) {
        std::fill(pick.begin(), pick.end(), 0);
        for (;;) {
            Matrix A(field, nv, n + 1);
            for (size_t i = 0; i <= n; ++i) {
                auto [lo, hi] = pairing[i];
                A.at(hi, i) = FieldElement::one(field);
                A.at(lo, i) = roots[pick[i]];
            }
            out.lines.emplace_back(std::move(A));
            // odometer over root assignments
            size_t pos = 0;
            while (pos <= n && ++pick[pos] == roots.size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos > n) break;
        }
    }
    return out;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const size_t k = m.size();
    if (k == 0) throw MismatchError("poly_det of empty matrix");
    for (const auto& row : m)
        if (row.size() != k) throw MismatchError("poly_det needs a square matrix");
    if (k == 1) return m[0][0];
    FieldSpec f = m[0][0].field();
    size_t nv = m[0][0].nvars();
    Polynomial acc = Polynomial::zero(f, nv);
    for (size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (size_t i = 1; i < k; ++i) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[i][c]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * poly_det(sub);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

DeterminantalPair determinantal_pair(const Tensor4& a) {
    if (a.size() != 4) throw MismatchError("tensor must be 4x4x4");
    for (const auto& slab : a) {
        if (slab.size() != 4) throw MismatchError("tensor must be 4x4x4");
        for (const auto& row : slab)
            if (row.size() != 4) throw MismatchError("tensor must be 4x4x4");
    }
    FieldSpec f = a[0][0][0].field();

    auto linear_matrix = [&](bool by_rows) {
        // by_rows: B_{kj}(x) = sum_i a[k][i][j] x_i ; else C_{ki}(y) = sum_j a[k][i][j] y_j
        std::vector<std::vector<Polynomial>> m(4, std::vector<Polynomial>(4, Polynomial::zero(f, 4)));
        for (size_t k = 0; k < 4; ++k)
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j) {
                    if (a[k][i][j].is_zero()) continue;
                    if (by_rows)
                        m[k][j] += Polynomial::variable(f, 4, i).scaled(a[k][i][j]);
                    else
                        m[k][i] += Polynomial::variable(f, 4, j).scaled(a[k][i][j]);
                }
        return m;
    };

    auto cofactor_map = [&](const std::vector<std::vector<Polynomial>>& m) {
        // phi_j = (-1)^j det of m with row 3 and column j removed (0-based)
        std::vector<Polynomial> phi;
        for (size_t j = 0; j < 4; ++j) {
            std::vector<std::vector<Polynomial>> sub;
            for (size_t i = 0; i < 3; ++i) {
                std::vector<Polynomial> row;
                for (size_t c = 0; c < 4; ++c)
                    if (c != j) row.push_back(m[i][c]);
                sub.push_back(std::move(row));
            }
            Polynomial d = poly_det(sub);
            phi.push_back(j % 2 ? -d : d);
        }
        return phi;
    };

    auto B = linear_matrix(true);
    auto C = linear_matrix(false);
    Polynomial detB = poly_det(B);
    Polynomial detC = poly_det(C);
    if (detB.is_zero()) throw GeometryError("degenerate tensor: det B is identically zero");
    if (detC.is_zero()) throw GeometryError("degenerate tensor: det C is identically zero");

    Hypersurface XB = Hypersurface::projective(detB);
    Hypersurface XC = Hypersurface::projective(detC);
    RationalMap cramer = RationalMap::from_form(Chart::Projective, 4, Chart::Projective, cofactor_map(B));
    RationalMap cramer_back = RationalMap::from_form(Chart::Projective, 4, Chart::Projective, cofactor_map(C));

    VerifyReport cert = verify_birational(cramer, cramer_back, XB, XC);
    return {std::move(XB), std::move(XC), std::move(cramer), std::move(cramer_back), std::move(cert)};
}

QuarticInvolution quartic_two_planes_involution(const Hypersurface& X) {
    if (X.chart() != Chart::Projective) throw ChartError("quartic involution expects a projective hypersurface");
    const size_t nv = X.nvars();
    if (nv < 4 || nv % 2 != 0) throw MismatchError("ambient space must be P^{2n+1}");
    const size_t n = nv / 2 - 1;
    if (X.degree() != 4) throw GeometryError("quartic_two_planes_involution expects degree 4");
    FieldSpec f = X.field();

    // split into block bidegree components; containment of both planes means
    // every monomial has bidegree (3,1), (2,2) or (1,3)
    Polynomial A = Polynomial::zero(f, nv);  // (3,1)
    Polynomial C = Polynomial::zero(f, nv);  // (1,3)
    for (const auto& t : X.defining().terms()) {
        uint32_t d1 = t.mono.degree_in(0, n + 1);
        if (d1 == 0)
            throw GeometryError("quartic does not vanish on L1: witness monomial " + t.mono.to_string());
        if (d1 == 4)
            throw GeometryError("quartic does not vanish on L2: witness monomial " + t.mono.to_string());
        Polynomial term = Polynomial::from_terms(f, nv, {{t.mono, t.coeff}});
        if (d1 == 3) A += term;
        if (d1 == 1) C += term;
    }

    std::vector<Polynomial> form;
    for (size_t i = 0; i < nv; ++i)
        form.push_back((i <= n ? C : A) * Polynomial::variable(f, nv, i));
    RationalMap phi = RationalMap::from_form(Chart::Projective, nv, Chart::Projective, std::move(form));

    VerifyReport cert = verify_birational(phi, phi, X, X);
    return {std::move(phi), std::move(A), std::move(C), std::move(cert)};
}

} // namespace hsurf
