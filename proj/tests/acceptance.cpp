// Acceptance suite: runs every acceptance criterion at its stated size and
// tolerance (all checks are exact) and prints one pass/fail line each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include <hsurf/constructions.hpp>
#include <hsurf/enumerate.hpp>
#include <hsurf/invariants.hpp>
#include <hsurf/parse.hpp>
#include <hsurf/random.hpp>

using namespace hsurf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::vector<FieldElement> ones(FieldSpec f, size_t n) {
    return std::vector<FieldElement>(n, FieldElement::one(f));
}

// ---------------------------------------------------------------- criterion 1
void criterion_stereographic() {
    for (size_t n = 1; n <= 4; ++n) {
        auto s = sphere_stereographic(n, ones(Q, n));
        expect(s.certificate.certified, "unit sphere n=" + std::to_string(n) + " not certified");
    }
    std::mt19937_64 rng(101);
    for (int it = 0; it < 20; ++it) {
        size_t n = 1 + it % 4;
        std::vector<FieldElement> a;
        for (size_t i = 0; i < n; ++i) a.push_back(random_nonzero_element(Q, rng, 7));
        auto s = sphere_stereographic(n, a);
        expect(s.certificate.certified, "weighted sphere case " + std::to_string(it) + " not certified");
    }
}

// ---------------------------------------------------------------- criterion 2
void criterion_quadric_projection() {
    std::mt19937_64 rng(202);
    int done_q = 0, done_p = 0;
    while (done_q + done_p < 20) {
        FieldSpec f = (done_q + done_p) % 2 ? FieldSpec::prime(101) : Q;
        size_t N = 3 + (done_q + done_p) % 3;  // quadrics in P^2..P^4

        // random point, then a random quadratic form corrected to vanish there
        std::vector<FieldElement> p(N, FieldElement::zero(f));
        for (auto& c : p) c = random_element(f, rng, 5);
        size_t anchor = 0;
        while (anchor < N && p[anchor].is_zero()) ++anchor;
        if (anchor == N) continue;

        std::vector<std::vector<FieldElement>> M(N, std::vector<FieldElement>(N, FieldElement::zero(f)));
        for (size_t i = 0; i < N; ++i)
            for (size_t j = i; j < N; ++j) {
                M[i][j] = random_element(f, rng, 5);
                M[j][i] = M[i][j];
            }
        // force G(p) = 0 through the anchor diagonal entry
        FieldElement val = FieldElement::zero(f);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) val += M[i][j] * p[i] * p[j];
        M[anchor][anchor] -= val / (p[anchor] * p[anchor]);

        Matrix Mm(f, N, N);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) Mm.at(i, j) = M[i][j];
        if (Mm.rank() < 3) continue;  // reducible quadric
        // smoothness of the center: gradient 2 M p
        auto grad = Mm.apply(p);
        bool smooth = false;
        for (const auto& g : grad) smooth = smooth || !g.is_zero();
        if (!smooth) continue;

        Polynomial G = Polynomial::zero(f, N);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                if (!Mm.at(i, j).is_zero())
                    G += (Polynomial::variable(f, N, i) * Polynomial::variable(f, N, j)).scaled(Mm.at(i, j));
        Hypersurface Qd = Hypersurface::projective(G);
        Point center = Point::projective(p);
        expect(point_on(Qd, center), "constructed center is off the quadric");
        if (!is_smooth_at(Qd, center)) continue;

        size_t c = 0;
        while (center.coords()[c].is_zero()) ++c;
        Matrix A(f, N, N - 1);
        size_t col = 0;
        for (size_t r = 0; r < N; ++r) {
            if (r == c) continue;
            A.at(r, col++) = FieldElement::one(f);
        }
        auto res = quadric_projection(Qd, center, LinearSubspace(std::move(A)));
        for (const auto& q : res.forward.form())
            expect(q.is_zero() || q.degree() == 1, "forward coordinate is not linear");
        int dmax = 0;
        for (const auto& q : res.inverse.form()) dmax = std::max(dmax, q.degree());
        expect(dmax == 2, "inverse coordinates are not quadratic in canonical form");
        expect(res.certificate.certified, "quadric projection certificate failed");
        (f.is_rationals() ? done_q : done_p)++;
    }
}

// ---------------------------------------------------------------- criterion 3
void criterion_fermat_lines() {
    FieldSpec f7 = FieldSpec::prime(7);
    auto lines = fermat_lines(3, 1, f7);
    expect(lines.lines.size() == 27, "expected 27 lines over F7");
    expect(fermat_line_count(3, 1) == 27, "closed formula disagrees at (3,1)");
    Polynomial F = Polynomial::zero(f7, 4);
    for (size_t i = 0; i < 4; ++i) F += Polynomial::variable(f7, 4, i).pow(3);
    Hypersurface X = Hypersurface::projective(F);
    for (const auto& L : lines.lines)
        expect(contains_subspace(X, L), "a claimed line misses the Fermat cubic");

    // independent pairing enumeration: distinct splittings of {0,1,2,3} into
    // two unordered pairs, counted by scanning all permutations
    std::vector<int> perm = {0, 1, 2, 3};
    std::set<std::set<std::pair<int, int>>> pairings;
    std::sort(perm.begin(), perm.end());
    do {
        std::pair<int, int> a = {std::min(perm[0], perm[1]), std::max(perm[0], perm[1])};
        std::pair<int, int> b = {std::min(perm[2], perm[3]), std::max(perm[2], perm[3])};
        pairings.insert({a, b});
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (uint32_t d = 1; d <= 5; ++d) {
        mpz_class brute = mpz_class(static_cast<unsigned long>(pairings.size())) * d * d;
        expect(fermat_line_count(d, 1) == brute,
               "count formula disagrees with brute-force pairing count at d=" + std::to_string(d));
    }
}

// ---------------------------------------------------------------- criterion 4
void criterion_cubic_two_lines() {
    FieldSpec f = FieldSpec::prime(101);
    std::mt19937_64 rng(404);
    int done = 0;
    while (done < 20) {
        // random dense cubic through both coordinate lines via a random table
        std::vector<Polynomial::Term> terms;
        for (int k = 0; k < 30; ++k) {
            Monomial m = random_monomial(4, 3, rng);
            uint32_t d1 = m.degree_in(0, 2);
            if (d1 == 0 || d1 == 3) continue;
            terms.push_back({std::move(m), random_element(f, rng)});
        }
        Polynomial F = Polynomial::from_terms(f, 4, std::move(terms));
        if (F.is_zero()) continue;
        Hypersurface X = Hypersurface::projective(F);
        auto r = cubic_two_planes_param(X);
        if (!r.dominant) continue;
        expect(r.certificate.certified, "cubic certificate failed");

        int trips = 0, budget = 2000;
        while (trips < 100 && budget-- > 0) {
            auto x = random_point_on(X, 50, rng);
            if (!x) break;
            auto par = r.inverse.evaluate(*x);
            if (!par) continue;
            auto back = r.third_point.evaluate(*par);
            if (!back) continue;
            expect(*back == *x, "cubic round trip moved a point");
            ++trips;
        }
        expect(trips == 100, "could not collect 100 defined round-trip points");
        ++done;
    }
}

// ---------------------------------------------------------------- criterion 5
void criterion_determinantal() {
    FieldSpec f = FieldSpec::prime(101);
    std::mt19937_64 rng(505);
    int done = 0;
    while (done < 10) {
        Tensor4 a(4, std::vector<std::vector<FieldElement>>(4,
                  std::vector<FieldElement>(4, FieldElement::zero(f))));
        for (auto& slab : a)
            for (auto& row : slab)
                for (auto& e : row) e = random_element(f, rng);
        DeterminantalPair r = determinantal_pair(a);
        int dmax = 0;
        for (const auto& q : r.cramer.form()) dmax = std::max(dmax, q.degree());
        expect(dmax == 3, "Cramer map is not cubic in canonical form");
        expect(restricts_to(r.cramer, r.XB, r.XC), "det B -> det C restriction failed");
        expect(restricts_to(r.cramer_back, r.XC, r.XB), "det C -> det B restriction failed");
        expect(r.certificate.certified, "determinantal pair not certified birational");
        ++done;
    }
}

// ---------------------------------------------------------------- criterion 6
void criterion_quartic_involution() {
    FieldSpec f = FieldSpec::prime(101);
    std::mt19937_64 rng(606);
    int done = 0;
    while (done < 10) {
        std::vector<Polynomial::Term> terms;
        for (int k = 0; k < 30; ++k) {
            Monomial m = random_monomial(4, 4, rng);
            uint32_t d1 = m.degree_in(0, 2);
            if (d1 == 0 || d1 == 4) continue;
            terms.push_back({std::move(m), random_element(f, rng)});
        }
        Polynomial F = Polynomial::from_terms(f, 4, std::move(terms));
        if (F.is_zero()) continue;
        Hypersurface X = Hypersurface::projective(F);
        QuarticInvolution r = quartic_two_planes_involution(X);
        if (r.block1_cubic_part.is_zero() || r.block2_cubic_part.is_zero()) continue;
        expect(r.certificate.certified, "quartic involution not certified");
        ++done;
    }
}

// ---------------------------------------------------------------- criterion 7
void criterion_volume_forms() {
    auto count_monomials = [](auto&& self, int degree, int slots) -> uint64_t {
        if (degree < 0) return 0;
        if (slots == 1) return 1;
        uint64_t total = 0;
        for (int e = 0; e <= degree; ++e) total += self(self, degree - e, slots - 1);
        return total;
    };
    for (uint32_t n = 1; n <= 6; ++n)
        for (uint32_t d = 1; d <= 12; ++d) {
            mpz_class lib = volume_form_dim(d, n);
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), d - 1, n + 1);
            if (d < n + 2) binom = 0;
            uint64_t brute =
                count_monomials(count_monomials, static_cast<int>(d) - static_cast<int>(n) - 2,
                                static_cast<int>(n) + 2);
            expect(lib == binom && lib == mpz_class(static_cast<unsigned long>(brute)),
                   "volume form dimension mismatch");
        }

    // classification boundaries
    for (uint32_t n = 1; n <= 8; ++n) {
        expect(classify_type(n + 1, n) == TypeClass::Fano, "boundary n+1 not Fano");
        expect(classify_type(n + 2, n) == TypeClass::CalabiYau, "boundary n+2 not Calabi-Yau");
        expect(classify_type(n + 3, n) == TypeClass::GeneralType, "boundary n+3 not general type");
    }

    // chart independence at 100 random smooth finite-field points
    FieldSpec f = FieldSpec::prime(101);
    std::mt19937_64 rng(707);
    int checked = 0, surfaces = 0;
    while (surfaces < 10) {
        Polynomial h = random_polynomial(f, 3, 3, 6, rng);
        if (h.is_zero() || h.is_constant()) continue;
        Hypersurface X = Hypersurface::affine(h);
        ++surfaces;
        int per_surface = 0, budget = 400;
        while (per_surface < 10 && budget-- > 0) {
            auto pt = random_point_on(X, 30, rng);
            if (!pt) break;
            auto grad = gradient_at(X, *pt);
            std::vector<size_t> usable;
            for (size_t i = 0; i < 3; ++i)
                if (!grad[i].is_zero()) usable.push_back(i);
            if (usable.size() < 2) continue;
            // exact tangent basis: null space of the gradient row
            Matrix g(f, 1, 3);
            for (size_t i = 0; i < 3; ++i) g.at(0, i) = grad[i];
            auto basis = g.null_space();
            if (basis.size() != 2) continue;
            FieldElement v1 = evaluate_volume_form(h, affine_volume_chart(h, usable[0]), *pt, basis);
            FieldElement v2 = evaluate_volume_form(h, affine_volume_chart(h, usable[1]), *pt, basis);
            expect(v1 == v2, "volume form charts disagree at a smooth point");
            ++per_surface;
            ++checked;
        }
    }
    expect(checked >= 100, "collected only " + std::to_string(checked) + " two-chart points");
}

// ---------------------------------------------------------------- criterion 8
void criterion_euler_identity() {
    std::mt19937_64 rng(808);
    int done = 0;
    while (done < 500) {
        FieldSpec f = [&] {
            switch (done % 4) {
                case 0: return Q;
                case 1: return FieldSpec::prime(101);
                case 2: return FieldSpec::prime(5);
                default: return FieldSpec::prime(7);
            }
        }();
        // include p | deg cases: degree cycles through 1..8, hitting 5 and 7
        uint32_t deg = 1 + done % 8;
        size_t nvars = 2 + done % 3;
        Polynomial g = random_homogeneous(f, nvars, deg, 8, rng);
        Polynomial lhs = Polynomial::zero(f, nvars);
        for (size_t i = 0; i < nvars; ++i) lhs += Polynomial::variable(f, nvars, i) * g.derivative(i);
        expect(lhs == g.scaled(FieldElement(f, static_cast<long>(deg))), "Euler identity violated");
        ++done;
    }
}

// ---------------------------------------------------------------- criterion 9
void criterion_diophantine_shadow() {
    std::mt19937_64 rng(909);
    for (uint32_t p : {5u, 7u, 11u, 13u}) {
        FieldSpec f = FieldSpec::prime(p);
        for (size_t n : {1ul, 2ul}) {
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<FieldElement> a;
                for (size_t i = 0; i < n; ++i) a.push_back(random_nonzero_element(f, rng));
                auto param = enum_quadric_points_mod_p(a);
                auto brute = brute_force_quadric_points(a);
                std::set<Point> lhs(brute.begin(), brute.end());
                std::set<Point> rhs(param.parametrized.begin(), param.parametrized.end());
                for (const auto& q : param.excluded) rhs.insert(q);
                expect(lhs == rhs, "parametrized+excluded set differs from brute force at p=" +
                                       std::to_string(p) + ", n=" + std::to_string(n));
            }
        }
    }
}

// --------------------------------------------------------------- criterion 10
void criterion_segre() {
    expect(segre_criterion(1, 1, 1, 2) == SegreVerdict::NotRationalOverQ, "(1,1,1,2) must be non-rational");
    expect(segre_criterion(1, 1, 1, 1) == SegreVerdict::Inconclusive, "(1,1,1,1) must be inconclusive");
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 100; ++it) {
        std::array<mpq_class, 4> a;
        for (auto& v : a) {
            long num = 0, den = 0;
            while (num == 0) num = d(rng);
            while (den == 0) den = d(rng);
            v = mpq_class(num, den);
            v.canonicalize();
        }
        SegreVerdict base = segre_criterion(a[0], a[1], a[2], a[3]);
        std::array<size_t, 4> idx = {0, 1, 2, 3};
        std::shuffle(idx.begin(), idx.end(), rng);
        expect(segre_criterion(a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]) == base,
               "Segre verdict is not permutation invariant");
    }
}

struct Criterion {
    int id;
    const char* label;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "stereographic round trip certified for n=1..4 and 20 weighted variants (exact)",
         criterion_stereographic},
        {2, "quadric projection: 20 random pointed quadrics over Q and F101, degrees 1/2, certified",
         criterion_quadric_projection},
        {3, "27 lines on the Fermat cubic over F7; counts vs brute-force pairings for d <= 5",
         criterion_fermat_lines},
        {4, "cubic with two lines: 20 random cubics over F101 certified, 100-point round trips exact",
         criterion_cubic_two_lines},
        {5, "determinantal quartics: 10 random tensors over F101, cubic Cramer maps certified",
         criterion_determinantal},
        {6, "quartic involution: 10 random quartics over F101, Phi^2 = id mod F and restriction",
         criterion_quartic_involution},
        {7, "volume forms: dimensions vs brute force (n<=6, d<=12), chart independence at 100 points",
         criterion_volume_forms},
        {8, "Euler identity exact for 500 random homogeneous polynomials incl. p | deg",
         criterion_euler_identity},
        {9, "diophantine completeness shadow over F5..F13, n=1,2, 5 random vectors each (exact sets)",
         criterion_diophantine_shadow},
        {10, "Segre criterion values and permutation invariance over 100 random inputs",
         criterion_segre},
    };

    int failures = 0;
    double total = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.what;
            ++failures;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("exception: ") + e.what();
            ++failures;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        std::printf("[%s] criterion %2d (%6.2fs): %s%s%s\n", verdict.c_str(), c.id, secs, c.label,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures,
                criteria.size(), total);
    return failures == 0 ? 0 : 1;
}
