#include "hsurf/ratmap.hpp"

#include <algorithm>
#include <cassert>

namespace hsurf {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field() != den_.field() || num_.nvars() != den_.nvars())
        throw MismatchError("rational function numerator/denominator ring mismatch");
    if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.field(), num_.nvars(), 1);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    FieldElement lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction::RationalFunction(Polynomial num)
    : RationalFunction(num, Polynomial::constant(num.field(), num.nvars(), 1)) {}

RationalFunction RationalFunction::zero(FieldSpec f, size_t nvars) {
    return RationalFunction(Polynomial::zero(f, nvars));
}

RationalFunction RationalFunction::one(FieldSpec f, size_t nvars) {
    return RationalFunction(Polynomial::constant(f, nvars, 1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionError("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

std::optional<FieldElement> RationalFunction::evaluate(const std::vector<FieldElement>& point) const {
    FieldElement d = den_.evaluate(point);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.leading_coefficient().is_one() && !den_.is_zero())
        return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

std::vector<size_t> normalized_blocks(Chart chart, size_t count, std::vector<size_t> blocks,
                                      const char* what) {
    if (chart == Chart::Affine) {
        if (!blocks.empty()) throw MismatchError(std::string(what) + ": blocks only apply to projective sides");
        return {};
    }
    if (blocks.empty()) return {count};
    size_t total = 0;
    for (size_t b : blocks) {
        if (b == 0) throw MismatchError(std::string(what) + ": empty block");
        total += b;
    }
    if (total != count) throw MismatchError(std::string(what) + ": block lengths do not sum to coordinate count");
    return blocks;
}

// Per-target-block gcd division, monic scaling and homogeneity validation
// shared by normalize() and from_form(). For a product target each block is
// its own projective tuple: common factors cancel blockwise and degrees only
// need to match within a block. Affine targets are one tuple including the
// trailing denominator.
void canonicalize_form(std::vector<Polynomial>& form, Chart source_chart, size_t source_vars,
                       Chart target_chart, const std::vector<size_t>& source_blocks,
                       const std::vector<size_t>& target_blocks) {
    bool all_zero = std::all_of(form.begin(), form.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (all_zero) throw GeometryError("rational map with all coordinates zero");

    std::vector<std::pair<size_t, size_t>> tuples;  // [lo, hi) ranges treated projectively
    if (target_chart == Chart::Affine) {
        tuples.emplace_back(0, form.size());
    } else {
        size_t lo = 0;
        for (size_t b : target_blocks) {
            tuples.emplace_back(lo, lo + b);
            lo += b;
        }
    }

    for (auto [lo, hi] : tuples) {
        std::vector<Polynomial> nonzero;
        for (size_t i = lo; i < hi; ++i)
            if (!form[i].is_zero()) nonzero.push_back(form[i]);
        if (nonzero.empty()) throw GeometryError("rational map coordinate block is identically zero");
        Polynomial g = gcd_many(nonzero);
        if (!g.is_constant())
            for (size_t i = lo; i < hi; ++i)
                if (!form[i].is_zero()) form[i] = exact_quotient(form[i], g);
        for (size_t i = lo; i < hi; ++i) {
            if (!form[i].is_zero()) {
                FieldElement inv = form[i].leading_coefficient().inverse();
                for (size_t j = lo; j < hi; ++j) form[j] = form[j].scaled(inv);
                break;
            }
        }
    }

    if (target_chart == Chart::Affine && form.back().is_zero())
        throw GeometryError("affine-target map has zero denominator coordinate");

    if (source_chart == Chart::Projective) {
        size_t slo = 0;
        for (size_t b : source_blocks) {
            for (auto [lo, hi] : tuples) {
                int deg = -1;
                for (size_t i = lo; i < hi; ++i) {
                    const Polynomial& p = form[i];
                    if (p.is_zero()) continue;
                    if (!p.is_homogeneous_in(slo, slo + b))
                        throw HomogeneityError(
                            "projective-source map coordinate is not homogeneous in a source block");
                    int d = p.degree_in(slo, slo + b);
                    if (deg == -1) deg = d;
                    if (d != deg)
                        throw HomogeneityError(
                            "projective-source map coordinates have unequal block degrees");
                }
            }
            slo += b;
        }
        (void)source_vars;
    }
}

} // namespace

std::vector<RationalFunction> RationalMap::affine_coords() const {
    if (target_chart_ != Chart::Affine)
        throw ChartError("affine_coords: map has a projective target");
    std::vector<RationalFunction> out;
    const Polynomial& den = form_.back();
    for (size_t i = 0; i + 1 < form_.size(); ++i) out.emplace_back(form_[i], den);
    return out;
}

RationalMap RationalMap::identity(Chart chart, size_t nvars, FieldSpec field, std::vector<size_t> blocks) {
    std::vector<Polynomial> form;
    for (size_t i = 0; i < nvars; ++i) form.push_back(Polynomial::variable(field, nvars, i));
    if (chart == Chart::Affine) {
        form.push_back(Polynomial::constant(field, nvars, 1));
        return from_form(chart, nvars, chart, std::move(form));
    }
    auto b = blocks;
    return from_form(chart, nvars, chart, std::move(form), b, b);
}

RationalMap RationalMap::from_form(Chart source_chart, size_t source_vars, Chart target_chart,
                                   std::vector<Polynomial> form, std::vector<size_t> source_blocks,
                                   std::vector<size_t> target_blocks) {
    if (form.empty()) throw MismatchError("rational map needs at least one coordinate");
    for (const auto& p : form) {
        if (p.field() != form[0].field() || p.nvars() != source_vars)
            throw MismatchError("rational map coordinates live in inconsistent rings");
    }
    if (target_chart == Chart::Affine && form.size() < 2)
        throw MismatchError("affine-target form needs coordinates plus a denominator entry");

    RationalMap m;
    m.source_chart_ = source_chart;
    m.target_chart_ = target_chart;
    m.source_vars_ = source_vars;
    m.source_blocks_ = normalized_blocks(source_chart, source_vars, std::move(source_blocks), "source");
    size_t tcount = target_chart == Chart::Affine ? form.size() - 1 : form.size();
    m.target_blocks_ = normalized_blocks(target_chart, tcount, std::move(target_blocks), "target");
    m.form_ = std::move(form);
    canonicalize_form(m.form_, source_chart, source_vars, target_chart, m.source_blocks_,
                      m.target_blocks_);
    return m;
}

bool RationalMap::operator==(const RationalMap& o) const {
    return source_chart_ == o.source_chart_ && target_chart_ == o.target_chart_ &&
           source_vars_ == o.source_vars_ && form_ == o.form_ && source_blocks_ == o.source_blocks_ &&
           target_blocks_ == o.target_blocks_;
}

std::optional<Point> RationalMap::evaluate(const Point& p) const {
    if (p.chart() != source_chart_) throw ChartError("evaluate: point chart does not match the map source");
    if (p.field() != field()) throw MismatchError("evaluate: point field does not match the map");
    if (p.size() != source_vars_) throw MismatchError("evaluate: point coordinate count mismatch");
    if (source_chart_ == Chart::Projective && p.blocks() != source_blocks_)
        throw MismatchError("evaluate: point block structure does not match the map source");

    std::vector<FieldElement> vals;
    vals.reserve(form_.size());
    for (const auto& f : form_) vals.push_back(f.evaluate(p.coords()));

    if (target_chart_ == Chart::Affine) {
        FieldElement den = vals.back();
        if (den.is_zero()) return std::nullopt;
        std::vector<FieldElement> coords(vals.begin(), vals.end() - 1);
        for (auto& c : coords) c /= den;
        return Point::affine(std::move(coords));
    }
    size_t lo = 0;
    for (size_t b : target_blocks_) {
        bool nz = false;
        for (size_t i = lo; i < lo + b; ++i) nz = nz || !vals[i].is_zero();
        if (!nz) return std::nullopt;
        lo += b;
    }
    return Point::projective_blocked(std::move(vals), target_blocks_);
}

std::string RationalMap::describe() const {
    return chart_name(source_chart_) + "^" + std::to_string(source_vars_) + " -> " +
           chart_name(target_chart_) + "^" + std::to_string(target_coords());
}

RationalMap normalize(std::vector<RationalFunction> coords, Chart source_chart, Chart target_chart,
                      std::vector<size_t> source_blocks, std::vector<size_t> target_blocks) {
    if (coords.empty()) throw MismatchError("rational map needs at least one coordinate");
    FieldSpec f = coords[0].field();
    size_t nvars = coords[0].nvars();
    for (const auto& c : coords)
        if (c.field() != f || c.nvars() != nvars) throw MismatchError("map coordinates in inconsistent rings");
    bool all_zero = std::all_of(coords.begin(), coords.end(),
                                [](const RationalFunction& c) { return c.is_zero(); });
    if (all_zero) throw GeometryError("rational map with all coordinates zero");

    // least common denominator
    Polynomial lcd = Polynomial::constant(f, nvars, 1);
    for (const auto& c : coords) {
        Polynomial g = gcd(lcd, c.den());
        lcd = exact_quotient(lcd, g) * c.den();
    }
    lcd = lcd.monic();

    std::vector<Polynomial> form;
    form.reserve(coords.size() + 1);
    for (const auto& c : coords) form.push_back(c.num() * exact_quotient(lcd, c.den()));
    if (target_chart == Chart::Affine) form.push_back(lcd);

    return RationalMap::from_form(source_chart, nvars, target_chart, std::move(form),
                                  std::move(source_blocks), std::move(target_blocks));
}

RationalMap compose(const RationalMap& F, const RationalMap& G) {
    if (G.target_chart() != F.source_chart())
        throw ChartError("compose: inner map target chart does not match outer map source chart");
    if (G.target_coords() != F.source_vars())
        throw MismatchError("compose: inner map coordinate count does not match outer map source");
    if (F.source_chart() == Chart::Projective && G.target_blocks() != F.source_blocks())
        throw MismatchError("compose: product structure mismatch between inner target and outer source");
    if (G.field() != F.field()) throw MismatchError("compose: field mismatch");

    std::vector<Polynomial> raw;
    raw.reserve(F.form().size());
    if (F.source_chart() == Chart::Projective) {
        for (const auto& f : F.form()) raw.push_back(f.substitute(G.form()));
    } else {
        // coordinates of G are form[i]/form[last]; substitute through the
        // homogenization of each outer coordinate polynomial
        const size_t s = F.source_vars();
        const Polynomial& den = G.form().back();
        int dmax = 0;
        for (const auto& f : F.form()) dmax = std::max(dmax, f.degree());
        for (const auto& f : F.form()) {
            if (f.is_zero()) {
                raw.push_back(Polynomial::zero(G.field(), G.source_vars()));
                continue;
            }
            Polynomial fh = f.homogenize(s);
            Polynomial val = fh.substitute(G.form());
            raw.push_back(val * den.pow(static_cast<uint32_t>(dmax - f.degree())));
        }
    }

    // undefined as a rational map when a whole projective target block (or
    // everything) lands in the outer indeterminacy locus
    auto range_zero = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            if (!raw[i].is_zero()) return false;
        return true;
    };
    if (F.target_chart() == Chart::Projective) {
        size_t lo = 0;
        for (size_t b : F.target_blocks()) {
            if (range_zero(lo, lo + b))
                throw CompositionError(
                    "composition undefined as rational map: image lies in the outer indeterminacy locus");
            lo += b;
        }
    } else if (range_zero(0, raw.size())) {
        throw CompositionError(
            "composition undefined as rational map: image lies in the outer indeterminacy locus");
    }

    return RationalMap::from_form(G.source_chart(), G.source_vars(), F.target_chart(), std::move(raw),
                                  G.source_blocks(), F.target_blocks());
}

bool divides_mod(const Polynomial& f, const Polynomial& h) {
    if (h.is_zero()) return f.is_zero();
    return divides(f, h);
}

namespace {

CertCheck divisibility_check(std::string name, const Polynomial& dividend, const Polynomial& h) {
    CertCheck c;
    c.name = std::move(name);
    if (h.is_zero()) {
        c.ok = dividend.is_zero();
        if (c.ok)
            c.quotient = Polynomial::zero(dividend.field(), dividend.nvars());
        else
            c.residual = dividend;
        if (!c.ok) c.note = "exact vanishing required (ambient-space modulus)";
        return c;
    }
    auto d = divide(dividend, h);
    c.ok = d.remainder.is_zero();
    if (c.ok)
        c.quotient = d.quotient;
    else
        c.residual = d.remainder;
    return c;
}

void check_map_surface_shapes(const RationalMap& F, const Hypersurface& X, const Hypersurface& Y) {
    if (X.chart() != F.source_chart() || X.nvars() != F.source_vars())
        throw ChartError("map source does not match the source hypersurface ambient space");
    if (Y.chart() != F.target_chart() || Y.nvars() != F.target_coords())
        throw ChartError("map target does not match the target hypersurface ambient space");
    if (X.field() != F.field() || Y.field() != F.field())
        throw MismatchError("field mismatch between map and hypersurfaces");
}

// Throws when the canonical form of F vanishes identically along X.
void check_defined_along(const RationalMap& F, const Hypersurface& X) {
    const Polynomial& h = X.defining();
    if (F.target_chart() == Chart::Affine) {
        if (divides_mod(F.form().back(), h))
            throw GeometryError("map undefined along X: denominator vanishes on the whole hypersurface");
        return;
    }
    for (const auto& p : F.form())
        if (!divides_mod(p, h)) return;
    throw GeometryError("map undefined along X: all coordinates vanish on the whole hypersurface");
}

} // namespace

RestrictionCertificate restricts_to_certified(const RationalMap& F, const Hypersurface& X,
                                              const Hypersurface& Y) {
    check_map_surface_shapes(F, X, Y);
    check_defined_along(F, X);

    RestrictionCertificate out;
    const Polynomial& h = X.defining();
    if (Y.is_ambient_space()) {
        out.check = divisibility_check("restricts(" + F.describe() + ")", Polynomial::zero(F.field(), F.source_vars()), h);
        out.ok = out.check.ok;
        return out;
    }

    if (F.target_chart() == Chart::Projective) {
        Polynomial n = Y.defining().substitute(F.form());
        out.check = divisibility_check("restricts(" + F.describe() + ")", n, h);
        out.ok = out.check.ok;
        return out;
    }

    // affine target: single reduced fraction of g(coords)
    const Polynomial& den = F.form().back();
    size_t t = Y.nvars();
    Polynomial gh = Y.defining().homogenize(t);
    Polynomial num = gh.substitute(F.form());
    Polynomial dpow = den.pow(static_cast<uint32_t>(std::max(Y.defining().degree(), 0)));
    if (!num.is_zero()) {
        Polynomial c = gcd(num, dpow);
        if (!c.is_constant()) {
            num = exact_quotient(num, c);
            dpow = exact_quotient(dpow, c);
        }
    }
    if (!h.is_zero() && !num.is_zero() && divides(dpow, h))
        throw GeometryError("map undefined along X: reduced denominator vanishes on the whole hypersurface");
    out.check = divisibility_check("restricts(" + F.describe() + ")", num, h);
    out.ok = out.check.ok;
    return out;
}

bool restricts_to(const RationalMap& F, const Hypersurface& X, const Hypersurface& Y) {
    return restricts_to_certified(F, X, Y).ok;
}

void VerifyReport::add(CertCheck c) {
    if (!c.ok && failure.empty()) failure = c.name + (c.note.empty() ? "" : " (" + c.note + ")");
    checks.push_back(std::move(c));
}

namespace {

// Round trip R of the space of S must be the identity modulo S's defining
// polynomial: affine side checks coordinate-by-coordinate reduced numerators,
// projective side checks within-block cross minors.
void identity_checks(const RationalMap& R, const Hypersurface& S, const std::string& label,
                     VerifyReport& rep) {
    const Polynomial& h = S.defining();
    FieldSpec f = R.field();
    size_t n = R.source_vars();

    if (S.chart() == Chart::Affine) {
        const Polynomial& den = R.form().back();
        if (divides_mod(den, h)) {
            CertCheck c;
            c.name = label + " defined";
            c.ok = false;
            c.note = "round trip denominator vanishes along the hypersurface";
            rep.add(std::move(c));
            return;
        }
        for (size_t i = 0; i + 1 < R.form().size(); ++i) {
            Polynomial num = R.form()[i] - Polynomial::variable(f, n, i) * den;
            if (!num.is_zero()) {
                Polynomial c = gcd(num, den);
                if (!c.is_constant()) num = exact_quotient(num, c);
            }
            rep.add(divisibility_check(label + " coordinate " + std::to_string(i), num, h));
        }
        return;
    }

    size_t lo = 0;
    for (size_t b : R.target_blocks()) {
        bool defined = false;
        for (size_t i = lo; i < lo + b && !defined; ++i) defined = !divides_mod(R.form()[i], h);
        if (!defined) {
            CertCheck c;
            c.name = label + " defined on block at " + std::to_string(lo);
            c.ok = false;
            c.note = "all block coordinates vanish along the hypersurface";
            rep.add(std::move(c));
            lo += b;
            continue;
        }
        for (size_t i = lo; i < lo + b; ++i) {
            for (size_t j = i + 1; j < lo + b; ++j) {
                Polynomial minor = R.form()[i] * Polynomial::variable(f, n, j) -
                                   R.form()[j] * Polynomial::variable(f, n, i);
                rep.add(divisibility_check(
                    label + " minor (" + std::to_string(i) + "," + std::to_string(j) + ")", minor, h));
            }
        }
        lo += b;
    }
}

} // namespace

VerifyReport verify_birational(const RationalMap& F, const RationalMap& G, const Hypersurface& X,
                               const Hypersurface& Y) {
    VerifyReport rep;

    RestrictionCertificate rf = restricts_to_certified(F, X, Y);
    rf.check.name = "F restricts X -> Y";
    rep.add(rf.check);
    RestrictionCertificate rg = restricts_to_certified(G, Y, X);
    rg.check.name = "G restricts Y -> X";
    rep.add(rg.check);

    if (!rf.ok || !rg.ok) {
        rep.certified = false;
        return rep;
    }

    try {
        RationalMap round_x = compose(G, F);
        identity_checks(round_x, X, "G∘F ≡ id mod X:", rep);
        RationalMap round_y = compose(F, G);
        identity_checks(round_y, Y, "F∘G ≡ id mod Y:", rep);
    } catch (const CompositionError& e) {
        CertCheck c;
        c.name = "round trips compose";
        c.ok = false;
        c.note = e.what();
        rep.add(std::move(c));
    }

    rep.certified = std::all_of(rep.checks.begin(), rep.checks.end(),
                                [](const CertCheck& c) { return c.ok; });
    return rep;
}

std::vector<std::pair<Polynomial, Polynomial>> indeterminacy_equations(const RationalMap& F) {
    if (F.target_chart() != Chart::Projective)
        throw ChartError("indeterminacy_equations expects the canonical projective form of a projective-target map");
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    size_t lo = 0;
    for (size_t b : F.target_blocks()) {
        for (size_t i = lo; i < lo + b; ++i)
            for (size_t j = i + 1; j < lo + b; ++j) pairs.emplace_back(F.form()[i], F.form()[j]);
        lo += b;
    }
    return pairs;
}

} // namespace hsurf
