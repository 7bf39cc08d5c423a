#include "hsurf/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace hsurf {

Polynomial Polynomial::constant(FieldSpec field, size_t nvars, const FieldElement& c) {
    Polynomial p(field, nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::constant(FieldSpec field, size_t nvars, long c) {
    return constant(field, nvars, FieldElement(field, c));
}

Polynomial Polynomial::variable(FieldSpec field, size_t nvars, size_t i, long coeff) {
    if (i >= nvars) throw IndexError("variable index " + std::to_string(i) + " out of range");
    FieldElement c(field, coeff);
    Polynomial p(field, nvars);
    if (!c.is_zero()) {
        Monomial m(nvars);
        m.exponent(i) = 1;
        p.terms_.push_back({std::move(m), c});
    }
    return p;
}

Polynomial Polynomial::from_terms(FieldSpec field, size_t nvars, std::vector<Term> terms) {
    std::map<Monomial, FieldElement, GrlexGreater> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != nvars) throw MismatchError("term variable count mismatch");
        if (t.coeff.field() != field) throw MismatchError("term field mismatch");
        auto [it, fresh] = acc.emplace(t.mono, t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    Polynomial p(field, nvars);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // grlex leading term has maximal total degree
    return static_cast<int>(terms_.front().mono.degree());
}

int Polynomial::degree_in(size_t lo, size_t hi) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree_in(lo, hi)));
    return terms_.empty() ? -1 : d;
}

int Polynomial::degree_in_var(size_t v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exponent(v)));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

bool Polynomial::is_homogeneous_in(size_t lo, size_t hi) const {
    if (terms_.empty()) return true;
    uint32_t d = terms_.front().mono.degree_in(lo, hi);
    for (const auto& t : terms_)
        if (t.mono.degree_in(lo, hi) != d) return false;
    return true;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DivisionError("zero polynomial has no leading term");
    return terms_.front();
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElement::zero(field_);
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (field_ != o.field_)
        throw MismatchError("polynomial field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
    if (nvars_ != o.nvars_)
        throw MismatchError("polynomial variable count mismatch: " + std::to_string(nvars_) + " vs " +
                            std::to_string(o.nvars_));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            FieldElement c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.terms_.push_back({terms_[i].mono, c});
            ++i, ++j;
        } else if (grlex_less(o.terms_[j].mono, terms_[i].mono)) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return zero(field_, nvars_);
    std::map<Monomial, FieldElement, GrlexGreater> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            FieldElement c = a.coeff * b.coeff;
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    }
    Polynomial out(field_, nvars_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.terms_.push_back({m, c});
    return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.field() != field_) throw MismatchError("scalar field mismatch");
    Polynomial out(field_, nvars_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial acc = constant(field_, nvars_, 1);
    Polynomial base(*this);
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(size_t var) const {
    if (var >= nvars_) throw IndexError("derivative variable index out of range");
    Polynomial out(field_, nvars_);
    for (const auto& t : terms_) {
        uint32_t e = t.mono.exponent(var);
        if (e == 0) continue;
        FieldElement c = t.coeff * FieldElement(field_, static_cast<long>(e));
        if (c.is_zero()) continue;  // e.g. characteristic divides the exponent
        Monomial m = t.mono;
        m.exponent(var) = e - 1;
        out.terms_.push_back({std::move(m), c});
    }
    // order is preserved within equal total degrees shifting down uniformly?
    // not in general: re-canonicalize.
    return from_terms(field_, nvars_, std::move(out.terms_));
}

Polynomial Polynomial::homogenize(size_t slot) const {
    if (slot > nvars_) throw IndexError("homogenization slot out of range");
    uint32_t d = terms_.empty() ? 0 : static_cast<uint32_t>(degree());
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<uint32_t> e = t.mono.exponents();
        e.insert(e.begin() + slot, d - t.mono.degree());
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(field_, nvars_ + 1, std::move(ts));
}

Polynomial Polynomial::dehomogenize(size_t slot) const {
    if (slot >= nvars_) throw IndexError("dehomogenization slot out of range");
    if (!is_homogeneous()) throw HomogeneityError("dehomogenize requires a homogeneous polynomial");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<uint32_t> e = t.mono.exponents();
        e.erase(e.begin() + slot);
        ts.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_terms(field_, nvars_ - 1, std::move(ts));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& args) const {
    if (args.size() != nvars_) throw MismatchError("substitute: expected " + std::to_string(nvars_) + " arguments");
    if (nvars_ == 0) {
        if (terms_.empty()) return Polynomial(field_, 0);
        return *this;
    }
    const FieldSpec tf = args[0].field();
    const size_t tn = args[0].nvars();
    for (const auto& a : args) {
        if (a.field() != tf || a.nvars() != tn) throw MismatchError("substitute: inconsistent argument ring");
    }
    if (tf != field_) throw MismatchError("substitute: argument field differs from polynomial field");
    // memoized powers of each argument
    std::vector<std::vector<Polynomial>> pows(nvars_);
    auto power = [&](size_t v, uint32_t e) -> const Polynomial& {
        auto& cache = pows[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(tf, tn, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * args[v]);
        return cache[e];
    };
    Polynomial acc = Polynomial::zero(tf, tn);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(tf, tn, t.coeff);
        for (size_t v = 0; v < nvars_; ++v) {
            uint32_t e = t.mono.exponent(v);
            if (e) prod *= power(v, e);
        }
        acc += prod;
    }
    return acc;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw MismatchError("evaluate: wrong coordinate count");
    for (const auto& c : point)
        if (c.field() != field_) throw MismatchError("evaluate: point field differs from polynomial field");
    FieldElement acc = FieldElement::zero(field_);
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (size_t i = 0; i < nvars_; ++i) {
            uint32_t e = t.mono.exponent(i);
            if (e) v *= point[i].pow(e);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coefficient().inverse());
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        FieldElement c = t.coeff;
        bool negative = c.field().is_rationals() && c.rational() < 0;
        if (i == 0) {
            if (negative) {
                s += "-";
                c = -c;
            }
        } else {
            s += negative ? " - " : " + ";
            if (negative) c = -c;
        }
        if (t.mono.degree() == 0) {
            s += c.to_string();
        } else {
            if (!c.is_one()) s += c.to_string() + "*";
            s += t.mono.to_string();
        }
    }
    return s;
}

DivisionResult divide(const Polynomial& f, const Polynomial& h) {
    if (h.is_zero()) throw DivisionError("division by the zero polynomial");
    if (f.field() != h.field() || f.nvars() != h.nvars())
        throw MismatchError("divide: incompatible polynomials");
    const auto& lt = h.leading_term();
    std::map<Monomial, FieldElement, GrlexGreater> work;
    for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);
    std::vector<Polynomial::Term> q, r;
    while (!work.empty()) {
        auto lead = *work.begin();
        if (lt.mono.divides(lead.first)) {
            Monomial qm = lt.mono.quotient_of(lead.first);
            FieldElement qc = lead.second / lt.coeff;
            q.push_back({qm, qc});
            for (const auto& t : h.terms()) {
                Monomial m = qm * t.mono;
                FieldElement delta = qc * t.coeff;
                auto it = work.find(m);
                if (it == work.end()) {
                    work.emplace(std::move(m), -delta);
                } else {
                    it->second -= delta;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
        } else {
            r.push_back({lead.first, lead.second});
            work.erase(work.begin());
        }
    }
    return {Polynomial::from_terms(f.field(), f.nvars(), std::move(q)),
            Polynomial::from_terms(f.field(), f.nvars(), std::move(r))};
}

bool divides(const Polynomial& f, const Polynomial& h) {
    if (f.is_zero()) return true;
    return divide(f, h).remainder.is_zero();
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& h) {
    auto d = divide(f, h);
    if (!d.remainder.is_zero()) throw DivisionError("exact_quotient: division is not exact");
    return d.quotient;
}

namespace {

// Coefficients of f viewed as a univariate polynomial in variable v; each
// entry lives in the full ring with v-exponent zero.
std::vector<Polynomial> coefficients_in(const Polynomial& f, size_t v) {
    int d = f.degree_in_var(v);
    std::vector<std::vector<Polynomial::Term>> buckets(static_cast<size_t>(d + 1));
    for (const auto& t : f.terms()) {
        uint32_t e = t.mono.exponent(v);
        Monomial m = t.mono;
        m.exponent(v) = 0;
        buckets[e].push_back({std::move(m), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.field(), f.nvars(), std::move(b)));
    return out;
}

Polynomial content_in(const Polynomial& f, size_t v) {
    auto cs = coefficients_in(f, v);
    std::vector<Polynomial> nonzero;
    for (auto& c : cs)
        if (!c.is_zero()) nonzero.push_back(std::move(c));
    return gcd_many(nonzero);
}

Polynomial times_var_power(const Polynomial& f, size_t v, uint32_t e) {
    if (e == 0) return f;
    Monomial m(f.nvars());
    m.exponent(v) = e;
    std::vector<Polynomial::Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.mono * m, t.coeff});
    return Polynomial::from_terms(f.field(), f.nvars(), std::move(ts));
}

Polynomial leading_coeff_in(const Polynomial& f, size_t v, int deg) {
    std::vector<Polynomial::Term> ts;
    for (const auto& t : f.terms()) {
        if (t.mono.exponent(v) == static_cast<uint32_t>(deg)) {
            Monomial m = t.mono;
            m.exponent(v) = 0;
            ts.push_back({std::move(m), t.coeff});
        }
    }
    return Polynomial::from_terms(f.field(), f.nvars(), std::move(ts));
}

// Pseudo-remainder of a by b in the variable v.
Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, size_t v) {
    int db = b.degree_in_var(v);
    Polynomial lb = leading_coeff_in(b, v, db);
    while (!r.is_zero() && r.degree_in_var(v) >= db) {
        int dr = r.degree_in_var(v);
        Polynomial lr = leading_coeff_in(r, v, dr);
        r = lb * r - times_var_power(lr, v, static_cast<uint32_t>(dr - db)) * b;
    }
    return r;
}

} // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.field() != g.field() || f.nvars() != g.nvars())
        throw MismatchError("gcd: incompatible polynomials");
    if (f.is_zero() && g.is_zero()) throw DivisionError("gcd(0, 0) is undefined");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f == g) return f.monic();
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.field(), f.nvars(), 1);

    // main variable: lowest index occurring in either operand
    size_t v = 0;
    while (f.degree_in_var(v) <= 0 && g.degree_in_var(v) <= 0) ++v;

    Polynomial cf = content_in(f, v);
    Polynomial cg = content_in(g, v);
    Polynomial c = gcd(cf, cg);
    Polynomial a = exact_quotient(f, cf);
    Polynomial b = exact_quotient(g, cg);
    if (a.degree_in_var(v) < b.degree_in_var(v)) std::swap(a, b);

    // primitive PRS
    Polynomial prim = Polynomial::constant(f.field(), f.nvars(), 1);
    while (true) {
        if (b.degree_in_var(v) == 0) {
            // v occurs in only one operand: primitive parts are coprime
            break;
        }
        Polynomial r = pseudo_remainder(a, b, v);
        if (r.is_zero()) {
            prim = b;
            break;
        }
        if (r.degree_in_var(v) == 0) {
            prim = Polynomial::constant(f.field(), f.nvars(), 1);
            break;
        }
        a = b;
        b = exact_quotient(r, content_in(r, v));
    }
    return (c * prim).monic();
}

Polynomial gcd_many(const std::vector<Polynomial>& polys) {
    std::vector<const Polynomial*> nonzero;
    for (const auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(&p);
    if (nonzero.empty()) throw DivisionError("gcd of an all-zero family is undefined");
    Polynomial acc = nonzero[0]->monic();
    for (size_t i = 1; i < nonzero.size() && !acc.is_constant(); ++i) acc = gcd(acc, *nonzero[i]);
    return acc;
}

} // namespace hsurf
