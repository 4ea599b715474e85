#include "vekua/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "vekua/dirac_bridge.hpp"
#include "vekua/dirac_operators.hpp"
#include "vekua/errors.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/potential.hpp"
#include "vekua/pseudoanalytic.hpp"

namespace vekua {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex rand_complex(Rng& rng, double scale) {
    return {scale * uniform(rng, -1.0, 1.0), scale * uniform(rng, -1.0, 1.0)};
}

Bicomplex bipow(const Bicomplex& z, int n) {
    Bicomplex acc{1.0};
    for (int i = 0; i < n; ++i) acc = acc * z;
    return acc;
}

PowerQuadratureConfig frozen_quadrature(int nodes = 1025) {
    PowerQuadratureConfig qc;
    qc.nodes = nodes;
    qc.adaptive = false;
    return qc;
}

BicomplexField power_field(const GeneratingSequence& seq, int n, const Bicomplex& a, Point z0,
                           const PowerQuadratureConfig& qc, double fd_step = 1e-4) {
    BicomplexField f;
    f.h = fd_step;
    f.value = [seq, n, a, z0, qc](Point z) { return build_power(seq, n, a, z0, z, qc); };
    return f;
}

CheckResult make_result(std::string name, double max_res, double tol, bool pass,
                        std::string details = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.max_residual = max_res;
    r.tolerance = tol;
    r.pass = pass;
    r.details = std::move(details);
    return r;
}

// Real linear form c0 + c1 x1 + c2 x2 + c3 x3.
struct LinearScalar {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double operator()(const Vec3& x) const { return c0 + c1 * x.x1 + c2 * x.x2 + c3 * x.x3; }
};

// Complex trivariate polynomial of total degree <= deg.
struct PolyField {
    struct Term {
        int i, j, k;
        Complex c;
    };
    std::vector<Term> terms;

    Complex operator()(const Vec3& x) const {
        Complex acc = 0.0;
        for (const Term& t : terms) {
            double mono = 1.0;
            for (int q = 0; q < t.i; ++q) mono *= x.x1;
            for (int q = 0; q < t.j; ++q) mono *= x.x2;
            for (int q = 0; q < t.k; ++q) mono *= x.x3;
            acc += t.c * mono;
        }
        return acc;
    }

    static PolyField random(Rng& rng, int deg) {
        PolyField p;
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                for (int k = 0; i + j + k <= deg; ++k)
                    p.terms.push_back({i, j, k, rand_complex(rng, 1.0)});
        return p;
    }
};

} // namespace

CheckResult check_intertwining(const VerifyOptions& opt, int n_fields) {
    const double tol = 1e-6;
    const GammaSet gammas = standard_gammas(opt.gamma_flip);
    const Mat4 g123 = gammas.spatial_product();

    Rng rng(opt.seed);
    double max_rel = 0.0;
    for (int f = 0; f < n_fields; ++f) {
        std::array<PolyField, 4> comps;
        for (auto& c : comps) c = PolyField::random(rng, 4);
        SpinorField phi;
        phi.h = 1e-3;
        phi.value = [comps](const Vec3& x) {
            SpinorValue v;
            for (int i = 0; i < 4; ++i) v[i] = comps[static_cast<size_t>(i)](x);
            return v;
        };

        PotentialData pot;
        pot.m = uniform(rng, 0.3, 1.5);
        pot.omega = rand_complex(rng, 0.8) + Complex(0.4, 0.0);
        auto rand_linear = [&rng]() {
            LinearScalar l{uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5),
                           uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)};
            return [l](const Vec3& x) { return l(x); };
        };
        pot.p_el = rand_linear();
        pot.p_sc = rand_linear();
        pot.A1 = rand_linear();
        pot.A2 = rand_linear();
        pot.A3 = rand_linear();

        QuatField F;
        F.h = 1e-3;
        F.value = [phi](const Vec3& x) { return transform_A(phi.value(x.reflected())); };

        for (int pt = 0; pt < 2; ++pt) {
            const Vec3 x{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
                         uniform(rng, -1.0, 1.0)};
            const Biquaternion lhs = apply_R_omega(F, x, pot, 1e-2);
            const SpinorValue dphi = apply_Dirac_omega(phi, x.reflected(), pot, gammas, 1e-2);
            const Biquaternion rhs = transform_A(g123 * dphi);
            const double denom = norm(phi.value(x.reflected())) + 1e-12;
            max_rel = std::max(max_rel, norm(lhs - rhs) / denom);
        }
    }
    return make_result("intertwining", max_rel, tol, max_rel <= tol);
}

CheckResult check_successor(const VerifyOptions&) {
    const double tol = 1e-8;
    const PotentialModel model = PotentialModel::constant(0.4, 0.9, Complex(0.5, 0.15));
    const GeneratingPair fg = model.pair_sigma();
    const GeneratingPair fg1 = model.pair_tau();
    const GridSpec grid{Rect{-1.0, 1.0, -1.0, 1.0}, 7, 7};

    double max_res = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            const Point z = grid.at(i, j);
            const CharCoeffs c0 = char_coeffs(fg, z);
            const CharCoeffs c1 = char_coeffs(fg1, z);
            // both directions of the period-2 chain
            max_res = std::max(max_res, norm(c1.a - c0.a));
            max_res = std::max(max_res, norm(c1.b + c0.B));
            max_res = std::max(max_res, norm(c0.b + c1.B));
        }
    }
    // negative control: the classical pair is not a successor of e^x, e^-x k
    const PotentialModel exp_model = PotentialModel::constant(0.0, 1.0, Complex(0.0, 0.0));
    const PotentialModel trivial = PotentialModel::zero(0.0, Complex(0.0, 0.0));
    const bool control_rejects =
        !is_successor(exp_model.pair_sigma(), trivial.pair_sigma(), grid, tol);

    const bool pass = max_res <= tol && control_rejects;
    return make_result("successor", max_res, tol, pass,
                       control_rejects ? "" : "negative control not rejected");
}

CheckResult check_classical_limit(const VerifyOptions& opt) {
    const double tol = 1e-9;
    const PotentialModel model = PotentialModel::zero(0.0, Complex(0.0, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    const Bicomplex a{1.0};

    Rng rng(opt.seed + 1);
    std::vector<Point> pts = {{1.0, 0.0}, {0.0, 1.0}, {0.6, -0.8}, {-0.7, 0.5}};
    while (pts.size() < 24) {
        const double r = uniform(rng, 0.4, 1.0);
        const double th = uniform(rng, 0.0, 2.0 * M_PI);
        pts.push_back({r * std::cos(th), r * std::sin(th)});
    }

    PowerQuadratureConfig qc; // adaptive
    double max_rel = 0.0;
    for (int n = 0; n <= 6; ++n) {
        for (const Point& z : pts) {
            const Bicomplex got = build_power(seq, n, a, z0, z, qc);
            const Bicomplex expect = bipow(to_bicomplex(z), n);
            max_rel = std::max(max_rel, norm(got - expect) / norm(expect));
        }
    }
    return make_result("classical-limit", max_rel, tol, max_rel <= tol);
}

namespace {

// Closed-form Z^(1) for a constant potential: both adjoint-side segment
// integrals reduce to line integrals of single exponentials,
// E(kappa; u, v) = (e^{kappa v} - e^{kappa u}) / kappa.
Bicomplex closed_form_z1_constant(const PotentialModel& model, const Bicomplex& a, Point z0,
                                  Point z) {
    const Complex i(0.0, 1.0);
    const double cm = model.p(0.0) + model.mass(); // constant p
    const Complex iw = i * model.omega();
    const Complex lambda1 = a.sc * std::exp(-model.tau(z0));
    const Complex mu1 = a.vec * std::exp(model.tau(z0));

    auto E = [](const Complex& kappa, double u, double v) {
        if (std::abs(kappa) < 1e-14) return Complex(v - u, 0.0);
        return (std::exp(kappa * v) - std::exp(kappa * u)) / kappa;
    };

    const Complex sc_g =
        lambda1 * E(Complex(-2.0 * cm, 0.0), z0.x, z.x) - mu1 * E(-2.0 * iw, z0.y, z.y);
    const Complex sc_f =
        lambda1 * E(2.0 * iw, z0.y, z.y) + mu1 * E(Complex(2.0 * cm, 0.0), z0.x, z.x);

    const Complex es = std::exp(model.sigma(z));
    const Bicomplex F{es, Complex(0.0)};
    const Bicomplex G{Complex(0.0), 1.0 / es};
    return F * sc_g + G * sc_f;
}

} // namespace

CheckResult check_closed_form_z1(const VerifyOptions& opt) {
    const double tol = 1e-8;
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.5, -0.25)};
    const Point z0{0.0, 0.0};

    Rng rng(opt.seed + 2);
    PowerQuadratureConfig qc;
    qc.rel_tol = 1e-11;
    double max_err = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Point z{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        const Bicomplex got = build_power(seq, 1, a, z0, z, qc);
        const Bicomplex expect = closed_form_z1_constant(model, a, z0, z);
        max_err = std::max(max_err, norm(got - expect) / std::max(1.0, norm(expect)));
    }
    return make_result("closed-form-z1", max_err, tol, max_err <= tol);
}

CheckResult check_pseudoanalyticity(const VerifyOptions& opt) {
    const double tol = 1e-5;
    Rng rng(opt.seed + 3);
    const std::vector<PotentialModel> models = {
        PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0)),
        PotentialModel::linear(0.6, 0.5, Complex(0.3, 0.1)),
    };
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.3, 0.2)};
    const Point z0{0.0, 0.0};
    const PowerQuadratureConfig qc = frozen_quadrature();

    double max_res = 0.0;
    int points = 0;
    for (const PotentialModel& model : models) {
        const GeneratingSequence seq = model.sequence_W();
        const VekuaCoefficients coeffs = model.coefficients_W();
        for (int n = 0; n <= 5; ++n) {
            const BicomplexField zn = power_field(seq, n, a, z0, qc);
            for (int t = 0; t < 17; ++t) {
                const Point z{uniform(rng, -0.8, 0.8), uniform(rng, -0.8, 0.8)};
                if (dist(z, z0) < 0.1) continue;
                max_res = std::max(max_res, norm(vekua_residual(coeffs, zn, z)));
                ++points;
            }
        }
    }
    std::ostringstream det;
    det << points << " interior points";
    return make_result("pseudoanalyticity", max_res, tol, max_res <= tol, det.str());
}

CheckResult check_asymptotic_order(const VerifyOptions&) {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.4, 0.0)};
    const Point z0{0.2, -0.1};

    PowerQuadratureConfig qc;
    qc.rel_tol = 1e-10;

    double min_margin = 1e9; // slope - (n + 0.8); must stay nonnegative
    std::ostringstream det;
    for (int n = 1; n <= 3; ++n) {
        std::vector<double> lr, le;
        for (int j = 0; j <= 8; ++j) {
            const double r = 1e-3 * std::pow(10.0, 0.25 * j);
            double err = 0.0;
            for (const double th : {0.3, 2.1, 4.4}) {
                const Point z{z0.x + r * std::cos(th), z0.y + r * std::sin(th)};
                const Bicomplex zn = build_power(seq, n, a, z0, z, qc);
                const Bicomplex lead = a * bipow(to_bicomplex(z) - to_bicomplex(z0), n);
                err = std::max(err, norm(zn - lead));
            }
            lr.push_back(std::log(r));
            le.push_back(std::log(std::max(err, 1e-300)));
        }
        const size_t q = lr.size();
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (size_t i = 0; i < q; ++i) {
            sx += lr[i];
            sy += le[i];
            sxx += lr[i] * lr[i];
            sxy += lr[i] * le[i];
        }
        const double slope = (q * sxy - sx * sy) / (q * sxx - sx * sx);
        min_margin = std::min(min_margin, slope - (n + 0.8));
        det << "n=" << n << " slope=" << slope << "; ";
    }
    return make_result("asymptotic-order", min_margin, 0.0, min_margin >= 0.0, det.str());
}

CheckResult check_differential_relation(const VerifyOptions&) {
    const double tol = 1e-5;
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const PotentialModel trivial = PotentialModel::zero(0.0, Complex(0.0, 0.0));
    const GeneratingSequence triv_seq = trivial.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.3, 0.0)};
    const Point z0{0.0, 0.0};
    const Point z{0.3, -0.4};

    double max_res = 0.0;
    for (int n = 1; n <= 4; ++n)
        max_res = std::max(max_res, differential_relation_residual(seq, n, a, z0, z));
    max_res =
        std::max(max_res, differential_relation_residual(triv_seq, 2, Bicomplex{1.0}, z0, z));
    return make_result("differential-relation", max_res, tol, max_res <= tol);
}

CheckResult check_path_independence(const VerifyOptions&) {
    const double tol = 1e-6;
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.2, 0.1)};
    const Point z0{-0.2, 0.1};
    const Point z{0.6, -0.5};

    PowerQuadratureConfig qc;
    qc.rel_tol = 1e-10;
    double max_diff = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const Bicomplex direct = build_power(seq, n, a, z0, z, qc);
        const Bicomplex dog1 = build_power_path(seq, n, a, {z0, Point{z.x, z0.y}, z}, qc);
        const Bicomplex dog2 = build_power_path(seq, n, a, {z0, Point{z0.x, z.y}, z}, qc);
        const double scale = std::max(1.0, norm(direct));
        max_diff = std::max(max_diff, norm(direct - dog1) / scale);
        max_diff = std::max(max_diff, norm(direct - dog2) / scale);
    }
    return make_result("path-independence", max_diff, tol, max_diff <= tol);
}

CheckResult check_schrodinger_conjugate(const VerifyOptions&) {
    const double tol = 1e-4;
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.25, 0.0)};
    const Point z0{0.0, 0.0};
    const PowerQuadratureConfig qc = frozen_quadrature(2049);
    const GridSpec grid{Rect{-0.6, 0.6, -0.6, 0.6}, 3, 3};

    double max_res = 0.0;
    for (int n = 0; n <= 3; ++n) {
        auto W = [&seq, n, &a, z0, &qc](Point z) { return build_power(seq, n, a, z0, z, qc); };
        const ConjugateReport rep = conjugate_parts_check(W, model, grid, 1e-3);
        max_res = std::max({max_res, rep.max_residual_sc, rep.max_residual_vec});
    }
    return make_result("schrodinger-conjugate", max_res, tol, max_res <= tol);
}

CheckResult check_taylor_roundtrip(const VerifyOptions&) {
    const double tol = 1e-3;
    const PotentialModel model = PotentialModel::constant(0.3, 0.5, Complex(0.4, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    const std::vector<Bicomplex> given = {
        {Complex(1.0, 0.0), Complex(0.2, 0.0)},
        {Complex(-0.5, 0.1), Complex(0.1, 0.0)},
        {Complex(0.3, 0.0), Complex(-0.3, 0.2)},
        {Complex(0.2, -0.1), Complex(0.4, 0.0)},
    };
    const PowerQuadratureConfig qc = frozen_quadrature();

    BicomplexField W;
    W.h = 2e-2;
    W.value = [seq, given, z0, qc](Point z) {
        Bicomplex acc;
        for (size_t n = 0; n < given.size(); ++n)
            acc += build_power(seq, static_cast<int>(n), given[n], z0, z, qc);
        return acc;
    };

    const TaylorExpansion rec = taylor_coefficients(W, seq, z0, 3, 2e-2);
    double max_err = 0.0;
    for (size_t n = 0; n < given.size(); ++n)
        max_err = std::max(max_err, norm(rec.coefficients[n] - given[n]));

    // re-expansion error at |z - z0| = 0.05 must decrease monotonically in N
    bool monotone = true;
    for (const double th : {0.7, 2.5, 4.0, 5.6}) {
        const Point z{z0.x + 0.05 * std::cos(th), z0.y + 0.05 * std::sin(th)};
        const Bicomplex exact = W.value(z);
        double prev = 1e300;
        for (int N = 0; N <= 3; ++N) {
            TaylorExpansion trunc;
            trunc.z0 = z0;
            trunc.coefficients.assign(rec.coefficients.begin(),
                                      rec.coefficients.begin() + N + 1);
            const double err = norm(evaluate_series(trunc, seq, z, qc) - exact);
            if (err > prev) monotone = false;
            prev = err;
        }
    }
    const bool pass = max_err <= tol && monotone;
    return make_result("taylor-roundtrip", max_err, tol, pass,
                       monotone ? "re-expansion error monotone in N"
                                : "re-expansion error NOT monotone");
}

CheckResult check_zero_divisor_preservation(const VerifyOptions&) {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.2, 0.0)};
    const Point z0{0.0, 0.0};
    const PowerQuadratureConfig qc = frozen_quadrature(513);

    // b = p + m - i omega k stays away from S u {0} on the domain
    double b_margin = 1e9;
    for (int i = 0; i <= 20; ++i) {
        const Bicomplex b = model.b_coeff({-1.0 + 0.1 * i, 0.0});
        b_margin = std::min(b_margin, std::abs(modulus_sq(b)) / (norm(b) * norm(b)));
    }

    int samples = 0, violations = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 50; ++i) {
            for (int j = 0; j < 50; ++j) {
                const Point z{-1.0 + 2.0 * i / 49.0, -1.0 + 2.0 * j / 49.0};
                const Bicomplex v = build_power(seq, n, a, z0, z, qc);
                ++samples;
                if (is_zero_divisor(v)) ++violations;
            }
        }
    }
    std::ostringstream det;
    det << samples << " samples, b margin " << b_margin;
    return make_result("zero-divisor-preservation", static_cast<double>(violations), 0.0,
                       violations == 0 && b_margin > 0.1, det.str());
}

CheckResult check_dirac_residual(const VerifyOptions& opt) {
    const double tol = 1e-4;
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq_W = model.sequence_W();
    const GeneratingSequence seq_w = model.sequence_w();
    const Point z0{0.0, 0.0};
    const PowerQuadratureConfig qc = frozen_quadrature();

    const BicomplexField W =
        power_field(seq_W, 2, Bicomplex{Complex(1.0, 0.0), Complex(0.2, 0.0)}, z0, qc);
    const BicomplexField w =
        power_field(seq_w, 1, Bicomplex{Complex(0.5, 0.0), Complex(-0.1, 0.0)}, z0, qc);

    const QuatField q = assemble_quaternion(W, w);
    const SpinorField phi = spinor_field(q);

    PotentialData pot;
    pot.m = model.mass();
    pot.omega = model.omega();
    pot.p_sc = [model](const Vec3& x) { return model.p(x.x2); };

    const GammaSet gammas = standard_gammas(false);
    Rng rng(opt.seed + 4);
    double max_res = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Vec3 x{uniform(rng, -0.7, 0.7), uniform(rng, -0.7, 0.7), 0.0};
        const SpinorValue res = apply_Dirac_omega(phi, x, pot, gammas, 1e-2);
        max_res = std::max(max_res, norm(res));
    }
    return make_result("dirac-residual", max_res, tol, max_res <= tol);
}

CheckResult check_similarity(const VerifyOptions&) {
    const double ratio_tol = 0.1;
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.3, 0.0));
    const VekuaCoefficients coeffs = model.coefficients_w(); // plain mode
    const GeneratingPair wpair = model.pair_tau_k();

    // w = F + 2 G solves the plain equation, never vanishes and never hits a
    // zero divisor on the grid (e^{4 tau} stays away from -4)
    auto w = [wpair](Point z) { return wpair.F.value(z) + 2.0 * wpair.G.value(z); };

    SimilarityConfig cfg;
    cfg.grid = GridSpec{Rect{-1.0, 1.0, -1.0, 1.0}, 64, 64};

    auto Phi = [&](Point z) { return w(z) * exp(similarity_factor(coeffs, w, cfg, z)); };

    const double cell = 2.0 / 64.0;
    double max_res_phi = 0.0, max_res_w = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Point z{-0.5 + 0.25 * i, -0.5 + 0.25 * j};
            // 2nd-order differences at one-cell step: the exponent field is
            // only cell-accurate
            const Bicomplex px =
                (Phi(Point{z.x + cell, z.y}) - Phi(Point{z.x - cell, z.y})) / (2.0 * cell);
            const Bicomplex py =
                (Phi(Point{z.x, z.y + cell}) - Phi(Point{z.x, z.y - cell})) / (2.0 * cell);
            const Bicomplex dbar_phi = px + Bicomplex::unit_k() * py;
            max_res_phi = std::max(max_res_phi, norm(dbar_phi));
            // dbar w = b conj(w) exactly
            max_res_w = std::max(max_res_w, norm(coeffs.b(z) * conj(w(z))));
        }
    }
    const double ratio = max_res_phi / max_res_w;
    std::ostringstream det;
    det << "|dbar Phi| " << max_res_phi << " vs |dbar w| " << max_res_w;
    return make_result("similarity", ratio, ratio_tol, ratio <= ratio_tol, det.str());
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "intertwining",
        "successor",
        "classical-limit",
        "closed-form-z1",
        "pseudoanalyticity",
        "asymptotic-order",
        "differential-relation",
        "path-independence",
        "schrodinger-conjugate",
        "taylor-roundtrip",
        "zero-divisor-preservation",
        "dirac-residual",
        "similarity",
    };
    return names;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
    using Fn = std::function<CheckResult(const VerifyOptions&)>;
    static const std::map<std::string, Fn> table = {
        {"intertwining", [](const VerifyOptions& o) { return check_intertwining(o); }},
        {"successor", check_successor},
        {"classical-limit", check_classical_limit},
        {"closed-form-z1", check_closed_form_z1},
        {"pseudoanalyticity", check_pseudoanalyticity},
        {"asymptotic-order", check_asymptotic_order},
        {"differential-relation", check_differential_relation},
        {"path-independence", check_path_independence},
        {"schrodinger-conjugate", check_schrodinger_conjugate},
        {"taylor-roundtrip", check_taylor_roundtrip},
        {"zero-divisor-preservation", check_zero_divisor_preservation},
        {"dirac-residual", check_dirac_residual},
        {"similarity", check_similarity},
    };
    std::vector<CheckResult> results;
    for (const std::string& name : names) {
        const auto it = table.find(name);
        if (it == table.end()) throw ConfigError("unknown check name: '" + name + "'");
        results.push_back(it->second(opt));
    }
    return results;
}

} // namespace vekua
