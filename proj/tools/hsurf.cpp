// Command-line front end: construction generators, certificates, point
// enumeration and classification reports. Reports go to stdout as
// line-delimited records; diagnostics go to stderr. Exit status is 0 exactly
// when every certificate in the report is true.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <hsurf/constructions.hpp>
#include <hsurf/enumerate.hpp>
#include <hsurf/invariants.hpp>
#include <hsurf/io.hpp>
#include <hsurf/parse.hpp>
#include <hsurf/random.hpp>
#include <hsurf/report.hpp>

using namespace hsurf;

namespace {

constexpr int kExitCertificateFalse = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<FieldElement> parse_coeff_list(const std::string& s, FieldSpec f) {
    std::vector<FieldElement> out;
    for (const auto& w : split_list(s)) out.push_back(FieldElement::from_string(f, w));
    return out;
}

void emit_map(std::ostream& os, const std::string& label, const RationalMap& m) {
    os << "# --- map " << label << " ---\n";
    write_map(os, m);
}

void emit_surface(std::ostream& os, const std::string& label, const Hypersurface& X) {
    os << "# --- hypersurface " << label << " ---\n";
    write_hypersurface(os, X);
}

void write_map_file(const std::string& dir, const std::string& name, const RationalMap& m) {
    std::ofstream out(dir + "/" + name);
    if (!out) throw ParseError("cannot write " + dir + "/" + name, 0, 0);
    write_map(out, m);
}

void write_surface_file(const std::string& dir, const std::string& name, const Hypersurface& X) {
    std::ofstream out(dir + "/" + name);
    if (!out) throw ParseError("cannot write " + dir + "/" + name, 0, 0);
    write_hypersurface(out, X);
}

int finish(const Report& rep) {
    rep.write(std::cout);
    return rep.ok() ? 0 : kExitCertificateFalse;
}

struct SphereOpts {
    size_t n = 1;
    std::string a;
    std::string field = "Q";
    std::string out_dir;
};

int run_param_sphere(const SphereOpts& o) {
    FieldSpec f = FieldSpec::parse(o.field);
    std::vector<FieldElement> a;
    if (o.a.empty()) {
        a.assign(o.n, FieldElement::one(f));
    } else {
        a = parse_coeff_list(o.a, f);
    }
    auto r = sphere_stereographic(o.n, a);
    Report rep("param-sphere");
    rep.add_record("n", std::to_string(o.n));
    rep.add_record("field", f.to_string());
    rep.add_record("source", r.source.defining().to_string());
    rep.add_report(r.certificate);
    if (!o.out_dir.empty()) {
        write_surface_file(o.out_dir, "source.hsf", r.source);
        write_surface_file(o.out_dir, "target.hsf", r.target);
        write_map_file(o.out_dir, "forward.map", r.forward);
        write_map_file(o.out_dir, "inverse.map", r.inverse);
        rep.add_record("written", o.out_dir + "/{source,target}.hsf " + o.out_dir + "/{forward,inverse}.map");
    }
    emit_surface(std::cout, "source", r.source);
    emit_map(std::cout, "forward", r.forward);
    emit_map(std::cout, "inverse", r.inverse);
    return finish(rep);
}

struct QuadricOpts {
    std::string surface;
    std::string point;
    int hyperplane_coord = -1;
    std::string out_dir;
};

int run_param_quadric(const QuadricOpts& o) {
    Hypersurface Q = read_hypersurface_file(o.surface);
    Point p = parse_point(o.point, Q.field());
    size_t c;
    if (o.hyperplane_coord >= 0) {
        c = static_cast<size_t>(o.hyperplane_coord);
        if (c >= Q.nvars()) throw IndexError("hyperplane coordinate out of range");
    } else {
        c = 0;
        while (c < Q.nvars() && p.coords()[c].is_zero()) ++c;
        if (c == Q.nvars()) throw GeometryError("point has no nonzero coordinate");
    }
    // H = (x_c = 0) parametrized by the remaining coordinate directions
    Matrix A(Q.field(), Q.nvars(), Q.nvars() - 1);
    size_t col = 0;
    for (size_t r = 0; r < Q.nvars(); ++r) {
        if (r == c) continue;
        A.at(r, col++) = FieldElement::one(Q.field());
    }
    auto res = quadric_projection(Q, p, LinearSubspace(std::move(A)));
    Report rep("param-quadric");
    rep.add_record("surface", Q.defining().to_string());
    rep.add_record("center", p.to_string());
    rep.add_record("hyperplane", "x" + std::to_string(c) + " = 0");
    rep.add_record("forward-degree", std::to_string(res.forward.form()[0].degree()));
    int inv_deg = 0;
    for (const auto& q : res.inverse.form()) inv_deg = std::max(inv_deg, q.degree());
    rep.add_record("inverse-degree", std::to_string(inv_deg));
    rep.add_report(res.certificate);
    if (!o.out_dir.empty()) {
        write_map_file(o.out_dir, "forward.map", res.forward);
        write_map_file(o.out_dir, "inverse.map", res.inverse);
    }
    emit_map(std::cout, "forward", res.forward);
    emit_map(std::cout, "inverse", res.inverse);
    return finish(rep);
}

struct MonoidOpts {
    size_t n = 1;
    std::string low, high;
    std::string field = "Q";
    std::string out_dir;
};

int run_param_monoid(const MonoidOpts& o) {
    FieldSpec f = FieldSpec::parse(o.field);
    Polynomial low = parse_polynomial(o.low, o.n + 1, f);
    Polynomial high = parse_polynomial(o.high, o.n + 1, f);
    auto r = monoid_param(low, high);
    Report rep("param-monoid");
    rep.add_record("surface", r.X.defining().to_string());
    rep.add_report(r.certificate);
    if (!o.out_dir.empty()) {
        write_surface_file(o.out_dir, "surface.hsf", r.X);
        write_map_file(o.out_dir, "forward.map", r.forward);
        write_map_file(o.out_dir, "inverse.map", r.inverse);
    }
    emit_surface(std::cout, "surface", r.X);
    emit_map(std::cout, "forward", r.forward);
    emit_map(std::cout, "inverse", r.inverse);
    return finish(rep);
}

int run_param_cubic(const std::string& surface, const std::string& out_dir) {
    Hypersurface X = read_hypersurface_file(surface);
    auto r = cubic_two_planes_param(X);
    Report rep("param-cubic2planes");
    rep.add_record("surface", X.defining().to_string());
    rep.add_record("dominant", r.dominant ? "true" : "false");
    rep.add_record("s-coefficient", r.s_coeff.to_string());
    rep.add_record("t-coefficient", r.t_coeff.to_string());
    rep.add_report(r.certificate);
    if (!out_dir.empty()) {
        write_map_file(out_dir, "third_point.map", r.third_point);
        write_map_file(out_dir, "inverse.map", r.inverse);
    }
    emit_map(std::cout, "third-point", r.third_point);
    emit_map(std::cout, "inverse", r.inverse);
    return finish(rep);
}

int run_chord(const std::string& surface, const std::string& point, const std::string& out_dir) {
    Hypersurface C = read_hypersurface_file(surface);
    Point p0 = parse_point(point, C.field());
    auto r = chord_involution(C, p0);
    Report rep("chord-involution");
    rep.add_record("surface", C.defining().to_string());
    rep.add_record("base-point", p0.to_string());
    rep.add_report(r.certificate);
    if (!out_dir.empty()) write_map_file(out_dir, "involution.map", r.involution);
    emit_map(std::cout, "involution", r.involution);
    return finish(rep);
}

struct FermatOpts {
    uint32_t d = 3;
    size_t n = 1;
    std::string field = "F7";
};

int run_fermat_lines(const FermatOpts& o) {
    FieldSpec f = FieldSpec::parse(o.field);
    auto r = fermat_lines(o.d, o.n, f);
    mpz_class expect = fermat_line_count(o.d, o.n);
    Report rep("fermat-lines");
    rep.add_record("degree", std::to_string(o.d));
    rep.add_record("plane-dim", std::to_string(o.n));
    rep.add_record("field", f.to_string());
    rep.add_record("count", std::to_string(r.lines.size()));
    rep.add_record("count-formula", expect.get_str());
    rep.add_record("partial", r.partial ? "true" : "false");

    // every line must lie on the Fermat hypersurface
    const size_t nv = 2 * o.n + 2;
    Polynomial F = Polynomial::zero(f, nv);
    for (size_t i = 0; i < nv; ++i) F += Polynomial::variable(f, nv, i).pow(o.d);
    Hypersurface X = Hypersurface::projective(F);
    bool all_on = true;
    for (const auto& L : r.lines) all_on = all_on && contains_subspace(X, L);
    CertCheck on;
    on.name = "all enumerated subspaces lie on the Fermat hypersurface";
    on.ok = all_on;
    rep.add_check(on);
    CertCheck cnt;
    cnt.name = "enumerated count matches the closed formula";
    cnt.ok = r.partial || mpz_class(static_cast<unsigned long>(r.lines.size())) == expect;
    if (r.partial) cnt.note = "partial enumeration over Q: only the root -1 is rational";
    rep.add_check(cnt);

    for (size_t i = 0; i < r.lines.size(); ++i) {
        std::ostringstream eq;
        const Matrix& A = r.lines[i].parametrization();
        for (size_t cidx = 0; cidx < A.cols(); ++cidx) {
            size_t hi = 0, lo = 0;
            for (size_t rr = 0; rr < A.rows(); ++rr) {
                if (A.at(rr, cidx).is_one()) hi = rr;
                else if (!A.at(rr, cidx).is_zero()) lo = rr;
            }
            if (cidx) eq << ", ";
            eq << "x" << lo << " = " << A.at(lo, cidx).to_string() << "*x" << hi;
        }
        rep.add_record("line", eq.str());
    }
    return finish(rep);
}

struct DetOpts {
    std::string tensor_file;
    uint64_t seed = 0;
    bool random = false;
    std::string field = "F101";
    std::string out_dir;
};

Tensor4 read_tensor_file(const std::string& path, FieldSpec f) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tensor file '" + path + "'", 0, 0);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ss(line);
        std::string w;
        while (ss >> w) words.push_back(w);
    }
    if (words.size() != 64) throw ParseError("tensor file must hold 64 entries a[k][i][j], k-major", 0, 0);
    Tensor4 a(4, std::vector<std::vector<FieldElement>>(4, std::vector<FieldElement>(4, FieldElement::zero(f))));
    size_t w = 0;
    for (size_t k = 0; k < 4; ++k)
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) a[k][i][j] = FieldElement::from_string(f, words[w++]);
    return a;
}

int run_det_quartic(const DetOpts& o) {
    FieldSpec f = FieldSpec::parse(o.field);
    Tensor4 a;
    if (!o.tensor_file.empty()) {
        a = read_tensor_file(o.tensor_file, f);
    } else if (o.random) {
        std::mt19937_64 rng(o.seed);
        a.assign(4, std::vector<std::vector<FieldElement>>(4, std::vector<FieldElement>(4, FieldElement::zero(f))));
        for (auto& slab : a)
            for (auto& row : slab)
                for (auto& e : row) e = random_element(f, rng);
    } else {
        throw ParseError("det-quartic needs --tensor or --random", 0, 0);
    }
    auto r = determinantal_pair(a);
    Report rep("det-quartic");
    rep.add_record("det-B", r.XB.defining().to_string());
    rep.add_record("det-C", r.XC.defining().to_string());
    int deg = 0;
    for (const auto& q : r.cramer.form()) deg = std::max(deg, q.degree());
    rep.add_record("cramer-degree", std::to_string(deg));
    rep.add_report(r.certificate);
    if (!o.out_dir.empty()) {
        write_surface_file(o.out_dir, "xb.hsf", r.XB);
        write_surface_file(o.out_dir, "xc.hsf", r.XC);
        write_map_file(o.out_dir, "cramer.map", r.cramer);
        write_map_file(o.out_dir, "cramer_back.map", r.cramer_back);
    }
    emit_surface(std::cout, "det-B", r.XB);
    emit_surface(std::cout, "det-C", r.XC);
    emit_map(std::cout, "cramer", r.cramer);
    emit_map(std::cout, "cramer-back", r.cramer_back);
    return finish(rep);
}

int run_quartic_involution(const std::string& surface, const std::string& out_dir) {
    Hypersurface X = read_hypersurface_file(surface);
    auto r = quartic_two_planes_involution(X);
    Report rep("quartic-involution");
    rep.add_record("surface", X.defining().to_string());
    rep.add_report(r.certificate);
    if (!out_dir.empty()) write_map_file(out_dir, "involution.map", r.involution);
    emit_map(std::cout, "involution", r.involution);
    return finish(rep);
}

struct VerifyOpts {
    std::string forward, inverse, source, target;
};

int run_verify(const VerifyOpts& o) {
    RationalMap F = read_map_file(o.forward);
    RationalMap G = read_map_file(o.inverse);
    Hypersurface X = read_hypersurface_file(o.source);
    Hypersurface Y = read_hypersurface_file(o.target);
    VerifyReport vr = verify_birational(F, G, X, Y);
    Report rep("verify-birational");
    rep.add_record("forward", F.describe());
    rep.add_record("inverse", G.describe());
    rep.add_record("birational", vr.certified ? "true" : "false");
    rep.add_report(vr);
    return finish(rep);
}

struct ClassifyOpts {
    uint32_t d = 3;
    uint32_t n = 2;
    std::string segre;
};

int run_classify(const ClassifyOpts& o) {
    Report rep("classify");
    rep.add_record("degree", std::to_string(o.d));
    rep.add_record("dimension", std::to_string(o.n));
    rep.add_record("type", type_class_name(classify_type(o.d, o.n)));
    rep.add_record("volume-form-dim", volume_form_dim(o.d, o.n).get_str());
    rep.add_record("not-rational-by-degree",
                   not_rational_by_degree(o.d, o.n) ? "certified-non-rational" : "no-conclusion");
    rep.add_record("isomorphism-linearity", linearity_class_name(isomorphism_linearity_class(o.n, o.d)));
    if (!o.segre.empty()) {
        auto words = split_list(o.segre);
        if (words.size() != 4) throw ParseError("--segre needs four nonzero rationals", 0, 0);
        SegreVerdict v = segre_criterion(mpq_class(words[0]), mpq_class(words[1]), mpq_class(words[2]),
                                         mpq_class(words[3]));
        rep.add_record("segre", segre_verdict_name(v));
    }
    return finish(rep);
}

struct SmoothOpts {
    std::string surface;
    std::string point;
    size_t samples = 0;
    bool exhaustive = false;
    uint64_t seed = 0;
};

void enumerate_field_points(const Hypersurface& X, const std::function<void(const Point&)>& fn) {
    // all points of the ambient space over F_p, canonical representatives only
    FieldSpec f = X.field();
    const uint32_t p = f.p();
    const size_t m = X.nvars();
    double total = 1;
    for (size_t i = 0; i < m; ++i) total *= p;
    if (total > 2e6) throw UnsupportedFieldError("exhaustive scan too large: p^nvars > 2e6");
    std::vector<uint32_t> x(m, 0);
    for (;;) {
        bool nonzero = false;
        for (uint32_t v : x) nonzero = nonzero || v != 0;
        if (X.chart() == Chart::Affine || nonzero) {
            std::vector<FieldElement> coords;
            for (uint32_t v : x) coords.emplace_back(f, static_cast<long>(v));
            if (X.chart() == Chart::Affine) {
                fn(Point::affine(std::move(coords)));
            } else {
                Point pt = Point::projective(coords);
                // visit each projective point once: canonical representative only
                if (pt.coords() == coords) fn(pt);
            }
        }
        size_t pos = m;
        while (pos > 0 && ++x[pos - 1] == p) {
            x[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
}

int run_smooth_check(const SmoothOpts& o) {
    Hypersurface X = read_hypersurface_file(o.surface);
    Report rep("smooth-check");
    rep.add_record("surface", X.defining().to_string());
    for (const auto& eq : singular_locus_equations(X)) rep.add_record("singular-locus-eq", eq.to_string());

    if (!o.point.empty()) {
        Point p = parse_point(o.point, X.field());
        CertCheck on;
        on.name = "point lies on the hypersurface";
        on.ok = point_on(X, p);
        rep.add_check(on);
        if (on.ok) {
            bool smooth = is_smooth_at(X, p);
            rep.add_record("smooth", smooth ? "true" : "false");
            if (smooth) rep.add_record("tangent-hyperplane", tangent_hyperplane(X, p).to_string());
        }
        return finish(rep);
    }

    if (o.exhaustive) {
        size_t on_surface = 0, singular = 0;
        enumerate_field_points(X, [&](const Point& pt) {
            if (!point_on(X, pt)) return;
            ++on_surface;
            if (!is_smooth_at(X, pt)) {
                ++singular;
                rep.add_record("singular-point", pt.to_string());
            }
        });
        rep.add_record("points-on-hypersurface", std::to_string(on_surface));
        CertCheck c;
        c.name = "no singular point over the scanned field";
        c.ok = singular == 0;
        rep.add_check(c);
        return finish(rep);
    }

    if (o.samples > 0) {
        std::mt19937_64 rng(o.seed);
        size_t found = 0, singular = 0;
        for (size_t i = 0; i < o.samples; ++i) {
            auto pt = random_point_on(X, 64, rng);
            if (!pt) continue;
            ++found;
            if (!is_smooth_at(X, *pt)) {
                ++singular;
                rep.add_record("singular-point", pt->to_string());
            }
        }
        rep.add_record("sampled-points", std::to_string(found));
        CertCheck c;
        c.name = "no singular point found among samples";
        c.ok = singular == 0;
        c.note = "probabilistic report, not a smoothness proof";
        rep.add_check(c);
        return finish(rep);
    }

    throw ParseError("smooth-check needs --point, --samples or --exhaustive", 0, 0);
}

struct PointsOpts {
    std::string a = "1";
    unsigned height = 3;
    std::string field = "Q";
};

int run_rational_points(const PointsOpts& o) {
    FieldSpec f = FieldSpec::parse(o.field);
    Report rep("rational-points");
    QuadricPointEnumeration result = [&] {
        if (f.is_rationals()) {
            std::vector<mpq_class> a;
            for (const auto& w : split_list(o.a)) a.emplace_back(w);
            for (auto& q : a) q.canonicalize();
            return enum_rational_points(a, o.height);
        }
        return enum_quadric_points_mod_p(parse_coeff_list(o.a, f));
    }();
    rep.add_record("equation", result.quadric.defining().to_string() + " = 0");
    if (f.is_rationals()) rep.add_record("height-bound", std::to_string(o.height));
    bool all_on = true;
    for (const auto& pt : result.parametrized) {
        all_on = all_on && point_on(result.quadric, pt);
        rep.add_record("point", pt.to_string());
    }
    for (const auto& pt : result.excluded) {
        all_on = all_on && point_on(result.quadric, pt);
        rep.add_record("excluded", pt.to_string());
    }
    rep.add_record("count", std::to_string(result.parametrized.size()));
    CertCheck c;
    c.name = "every emitted point satisfies the equation exactly";
    c.ok = all_on;
    rep.add_check(c);
    return finish(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of birational maps between hypersurfaces"};
    app.require_subcommand(1);

    SphereOpts sphere;
    auto* cmd_sphere = app.add_subcommand("param-sphere", "stereographic projection of a weighted sphere");
    cmd_sphere->add_option("--n", sphere.n, "dimension")->required();
    cmd_sphere->add_option("--a", sphere.a, "comma list of n nonzero coefficients (default all ones)");
    cmd_sphere->add_option("--field", sphere.field, "Q or F<p>");
    cmd_sphere->add_option("--out-dir", sphere.out_dir, "write fixtures into this directory");

    QuadricOpts quad;
    auto* cmd_quadric = app.add_subcommand("param-quadric", "projection of a quadric from a smooth point");
    cmd_quadric->add_option("--surface", quad.surface, "hypersurface fixture")->required();
    cmd_quadric->add_option("--point", quad.point, "projective point literal")->required();
    cmd_quadric->add_option("--hyperplane-coord", quad.hyperplane_coord,
                            "project to (x_c = 0); default: first coordinate nonzero at the point");
    cmd_quadric->add_option("--out-dir", quad.out_dir, "write fixtures into this directory");

    MonoidOpts monoid;
    auto* cmd_monoid = app.add_subcommand("param-monoid", "monoid hypersurface parametrization");
    cmd_monoid->add_option("--n", monoid.n, "projective dimension of the image space")->required();
    cmd_monoid->add_option("--low", monoid.low, "degree d-1 form in x0..xn")->required();
    cmd_monoid->add_option("--high", monoid.high, "degree d form in x0..xn")->required();
    cmd_monoid->add_option("--field", monoid.field, "Q or F<p>");
    cmd_monoid->add_option("--out-dir", monoid.out_dir, "write fixtures into this directory");

    std::string cubic_surface, cubic_out;
    auto* cmd_cubic = app.add_subcommand("param-cubic2planes", "third-point map of a cubic through two planes");
    cmd_cubic->add_option("--surface", cubic_surface, "hypersurface fixture")->required();
    cmd_cubic->add_option("--out-dir", cubic_out, "write fixtures into this directory");

    std::string chord_surface, chord_point, chord_out;
    auto* cmd_chord = app.add_subcommand("chord-involution", "chord involution of a plane cubic");
    cmd_chord->add_option("--surface", chord_surface, "hypersurface fixture")->required();
    cmd_chord->add_option("--point", chord_point, "base point on the cubic")->required();
    cmd_chord->add_option("--out-dir", chord_out, "write fixtures into this directory");

    FermatOpts fermat;
    auto* cmd_fermat = app.add_subcommand("fermat-lines", "linear subspaces on the Fermat hypersurface");
    cmd_fermat->add_option("--d", fermat.d, "degree")->required();
    cmd_fermat->add_option("--n", fermat.n, "subspace dimension")->required();
    cmd_fermat->add_option("--field", fermat.field, "Q or F<p>")->required();

    DetOpts det;
    auto* cmd_det = app.add_subcommand("det-quartic", "determinantal quartic pair with Cramer maps");
    cmd_det->add_option("--tensor", det.tensor_file, "file with 64 entries a[k][i][j] (k-major)");
    cmd_det->add_flag("--random", det.random, "draw a random tensor");
    cmd_det->add_option("--seed", det.seed, "seed for --random");
    cmd_det->add_option("--field", det.field, "Q or F<p>");
    cmd_det->add_option("--out-dir", det.out_dir, "write fixtures into this directory");

    std::string quartic_surface, quartic_out;
    auto* cmd_quartic = app.add_subcommand("quartic-involution", "fourth-point involution of a quartic through two planes");
    cmd_quartic->add_option("--surface", quartic_surface, "hypersurface fixture")->required();
    cmd_quartic->add_option("--out-dir", quartic_out, "write fixtures into this directory");

    VerifyOpts verify;
    auto* cmd_verify = app.add_subcommand("verify-birational", "certify a pair of maps as birational inverses");
    cmd_verify->add_option("--forward", verify.forward, "map fixture X -> Y")->required();
    cmd_verify->add_option("--inverse", verify.inverse, "map fixture Y -> X")->required();
    cmd_verify->add_option("--source", verify.source, "hypersurface fixture for X")->required();
    cmd_verify->add_option("--target", verify.target, "hypersurface fixture for Y")->required();

    ClassifyOpts classify;
    auto* cmd_classify = app.add_subcommand("classify", "degree/dimension invariants");
    cmd_classify->add_option("--d", classify.d, "degree")->required();
    cmd_classify->add_option("--n", classify.n, "dimension")->required();
    cmd_classify->add_option("--segre", classify.segre, "four diagonal cubic coefficients a0,a1,a2,a3");

    SmoothOpts smooth;
    auto* cmd_smooth = app.add_subcommand("smooth-check", "pointwise smoothness and singular-locus report");
    cmd_smooth->add_option("--surface", smooth.surface, "hypersurface fixture")->required();
    cmd_smooth->add_option("--point", smooth.point, "point literal");
    cmd_smooth->add_option("--samples", smooth.samples, "random finite-field samples");
    cmd_smooth->add_flag("--exhaustive", smooth.exhaustive, "scan every point over F_p");
    cmd_smooth->add_option("--seed", smooth.seed, "sampling seed");

    PointsOpts pts;
    auto* cmd_points = app.add_subcommand("rational-points", "stereographic enumeration of quadric points");
    cmd_points->add_option("--a", pts.a, "comma list of nonzero coefficients")->required();
    cmd_points->add_option("--height", pts.height, "bound on max(|num|, den) per parameter coordinate");
    cmd_points->add_option("--field", pts.field, "Q or F<p>");

    try {
        app.parse(argc, argv);
        if (*cmd_sphere) return run_param_sphere(sphere);
        if (*cmd_quadric) return run_param_quadric(quad);
        if (*cmd_monoid) return run_param_monoid(monoid);
        if (*cmd_cubic) return run_param_cubic(cubic_surface, cubic_out);
        if (*cmd_chord) return run_chord(chord_surface, chord_point, chord_out);
        if (*cmd_fermat) return run_fermat_lines(fermat);
        if (*cmd_det) return run_det_quartic(det);
        if (*cmd_quartic) return run_quartic_involution(quartic_surface, quartic_out);
        if (*cmd_verify) return run_verify(verify);
        if (*cmd_classify) return run_classify(classify);
        if (*cmd_smooth) return run_smooth_check(smooth);
        if (*cmd_points) return run_rational_points(pts);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
