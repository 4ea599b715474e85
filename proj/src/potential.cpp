#include "vekua/potential.hpp"

#include <algorithm>
#include <cmath>

#include "vekua/errors.hpp"
#include "vekua/quadrature.hpp"

namespace vekua {

namespace {

// Monotone (Fritsch-Carlson) cubic interpolant with derivative access.
struct Pchip {
    std::vector<double> x, y, d;

    static Pchip build(std::vector<double> xs, std::vector<double> ys) {
        const size_t n = xs.size();
        if (n < 2 || ys.size() != n) throw Error("tabulated potential: need >= 2 samples");
        for (size_t i = 1; i < n; ++i)
            if (xs[i] <= xs[i - 1]) throw Error("tabulated potential: x not increasing");
        std::vector<double> h(n - 1), delta(n - 1), d(n);
        for (size_t i = 0; i + 1 < n; ++i) {
            h[i] = xs[i + 1] - xs[i];
            delta[i] = (ys[i + 1] - ys[i]) / h[i];
        }
        if (n == 2) {
            d[0] = d[1] = delta[0];
        } else {
            for (size_t i = 1; i + 1 < n; ++i) {
                if (delta[i - 1] * delta[i] <= 0.0) {
                    d[i] = 0.0;
                } else {
                    const double w1 = 2.0 * h[i] + h[i - 1];
                    const double w2 = h[i] + 2.0 * h[i - 1];
                    d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
                }
            }
            auto end_slope = [](double h0, double h1, double d0, double d1) {
                double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
                if (s * d0 <= 0.0) s = 0.0;
                else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) s = 3.0 * d0;
                return s;
            };
            d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
            d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
        }
        return Pchip{std::move(xs), std::move(ys), std::move(d)};
    }

    size_t interval(double t) const {
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        size_t i = static_cast<size_t>(it - x.begin());
        if (i == 0) return 0;
        if (i >= x.size()) return x.size() - 2;
        return i - 1;
    }

    double eval(double t) const {
        // linear extension beyond the table
        if (t <= x.front()) return y.front() + d.front() * (t - x.front());
        if (t >= x.back()) return y.back() + d.back() * (t - x.back());
        const size_t i = interval(t);
        const double h = x[i + 1] - x[i];
        const double s = (t - x[i]) / h;
        const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        const double h10 = s * (1.0 - s) * (1.0 - s);
        const double h01 = s * s * (3.0 - 2.0 * s);
        const double h11 = s * s * (s - 1.0);
        return h00 * y[i] + h * h10 * d[i] + h01 * y[i + 1] + h * h11 * d[i + 1];
    }

    double deriv(double t) const {
        if (t <= x.front()) return d.front();
        if (t >= x.back()) return d.back();
        const size_t i = interval(t);
        const double h = x[i + 1] - x[i];
        const double s = (t - x[i]) / h;
        const double g00 = 6.0 * s * s - 6.0 * s;
        const double g10 = 3.0 * s * s - 4.0 * s + 1.0;
        const double g01 = -6.0 * s * s + 6.0 * s;
        const double g11 = 3.0 * s * s - 2.0 * s;
        return (g00 * y[i] + h * g10 * d[i] + g01 * y[i + 1] + h * g11 * d[i + 1]) / h;
    }
};

// Hermite interpolant on a (possibly non-uniform) grid with exact derivative
// samples; used for the antiderivative P and for RK4-produced f0 data.
struct HermiteTable {
    std::vector<double> x, y, dy;

    size_t interval(double t) const {
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        size_t i = static_cast<size_t>(it - x.begin());
        if (i == 0) return 0;
        if (i >= x.size()) return x.size() - 2;
        return i - 1;
    }

    double eval(double t) const {
        if (t <= x.front()) return y.front() + dy.front() * (t - x.front());
        if (t >= x.back()) return y.back() + dy.back() * (t - x.back());
        const size_t i = interval(t);
        const double h = x[i + 1] - x[i];
        const double s = (t - x[i]) / h;
        const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        const double h10 = s * (1.0 - s) * (1.0 - s);
        const double h01 = s * s * (3.0 - 2.0 * s);
        const double h11 = s * s * (s - 1.0);
        return h00 * y[i] + h * h10 * dy[i] + h01 * y[i + 1] + h * h11 * dy[i + 1];
    }
};

} // namespace

GeneratingPair PotentialModel::exp_pair(double sign_alpha, bool times_k) const {
    // exponent of pair members: sa*alpha(x) + sb*i*omega*y
    const auto P = P_;
    const auto p = p_;
    const double m = m_;
    const Complex iw = Complex(0.0, 1.0) * omega_;

    auto make_field = [P, p, m, iw](double sa, double sb, bool vec_slot, double sign) {
        BicomplexField f;
        auto expval = [P, p, m, iw, sa, sb](Point z) {
            return std::exp(sa * Complex(P(z.x) + m * z.x, 0.0) + sb * iw * z.y);
        };
        auto place = [vec_slot, sign](Complex v) {
            return vec_slot ? Bicomplex{Complex(0.0), sign * v} : Bicomplex{sign * v, Complex(0.0)};
        };
        f.value = [expval, place](Point z) { return place(expval(z)); };
        f.ddx = [expval, place, p, m, sa](Point z) {
            return place(sa * (p(z.x) + m) * expval(z));
        };
        f.ddy = [expval, place, iw, sb](Point z) { return place(sb * iw * expval(z)); };
        return f;
    };

    GeneratingPair pair;
    pair.domain = domain_;
    if (!times_k) {
        // (e^gamma, e^-gamma k) with gamma = sa*alpha + i omega y
        pair.F = make_field(sign_alpha, 1.0, false, 1.0);
        pair.G = make_field(-sign_alpha, -1.0, true, 1.0);
    } else {
        // (e^gamma k, -e^-gamma)
        pair.F = make_field(sign_alpha, 1.0, true, 1.0);
        pair.G = make_field(-sign_alpha, -1.0, false, -1.0);
    }
    return pair;
}

GeneratingPair PotentialModel::pair_sigma() const { return exp_pair(1.0, false); }
GeneratingPair PotentialModel::pair_tau() const { return exp_pair(-1.0, false); }
GeneratingPair PotentialModel::pair_tau_k() const { return exp_pair(-1.0, true); }
GeneratingPair PotentialModel::pair_sigma_k() const { return exp_pair(1.0, true); }

GeneratingSequence PotentialModel::sequence_W() const {
    return GeneratingSequence({pair_sigma(), pair_tau()});
}

GeneratingSequence PotentialModel::sequence_w() const {
    return GeneratingSequence({pair_tau_k(), pair_sigma_k()});
}

VekuaCoefficients PotentialModel::coefficients_W() const {
    VekuaCoefficients vc;
    const auto p = p_;
    const double m = m_;
    const Complex w = omega_;
    vc.b = [p, m, w](Point z) {
        return Bicomplex{Complex(p(z.x) + m, 0.0), -Complex(0.0, 1.0) * w};
    };
    vc.mode = ConjugationMode::outer;
    return vc;
}

VekuaCoefficients PotentialModel::coefficients_w() const {
    VekuaCoefficients vc = coefficients_W();
    vc.mode = ConjugationMode::plain;
    return vc;
}

PotentialModel PotentialModel::zero(double m, Complex omega, Rect domain) {
    PotentialModel md;
    md.p_ = [](double) { return 0.0; };
    md.P_ = [](double) { return 0.0; };
    md.dp_ = [](double) { return 0.0; };
    md.m_ = m;
    md.omega_ = omega;
    md.domain_ = domain;
    md.provenance_ = "preset:zero";
    return md;
}

PotentialModel PotentialModel::constant(double c, double m, Complex omega, Rect domain) {
    PotentialModel md;
    md.p_ = [c](double) { return c; };
    md.P_ = [c](double x) { return c * x; };
    md.dp_ = [](double) { return 0.0; };
    md.m_ = m;
    md.omega_ = omega;
    md.domain_ = domain;
    md.provenance_ = "preset:constant";
    return md;
}

PotentialModel PotentialModel::linear(double slope, double m, Complex omega, Rect domain) {
    PotentialModel md;
    md.p_ = [slope](double x) { return slope * x; };
    md.P_ = [slope](double x) { return 0.5 * slope * x * x; };
    md.dp_ = [slope](double) { return slope; };
    md.m_ = m;
    md.omega_ = omega;
    md.domain_ = domain;
    md.provenance_ = "preset:linear";
    return md;
}

PotentialModel PotentialModel::tabulated(std::vector<double> xs, std::vector<double> ps,
                                         double m, Complex omega, Rect domain) {
    auto pchip = std::make_shared<Pchip>(Pchip::build(std::move(xs), std::move(ps)));

    // antiderivative on a fine uniform grid, h ~ 1e-3 of the table width,
    // then Hermite interpolation with the exact derivative P' = p
    const double xa = pchip->x.front();
    const double xb = pchip->x.back();
    int n_fine = static_cast<int>(std::ceil((xb - xa) / (1e-3 * (xb - xa))));
    if (n_fine % 2 == 1) ++n_fine;          // even interval count for Simpson
    const double dx = (xb - xa) / n_fine;
    std::vector<double> pv(static_cast<size_t>(n_fine) + 1);
    std::vector<double> gx(pv.size());
    for (size_t i = 0; i < pv.size(); ++i) {
        gx[i] = xa + static_cast<double>(i) * dx;
        pv[i] = pchip->eval(gx[i]);
    }
    auto table = std::make_shared<HermiteTable>();
    table->x = std::move(gx);
    table->y = cumulative_simpson(pv, dx);
    table->dy = std::move(pv);

    PotentialModel md;
    md.p_ = [pchip](double x) { return pchip->eval(x); };
    md.dp_ = [pchip](double x) { return pchip->deriv(x); };
    md.P_ = [table](double x) { return table->eval(x); };
    md.m_ = m;
    md.omega_ = omega;
    md.domain_ = domain;
    md.provenance_ = "tabulated";
    return md;
}

PotentialModel PotentialModel::from_nu(const std::function<double(double)>& nu, double x0,
                                       double f0_init, double df0_init, Complex omega,
                                       Rect domain) {
    const double xa = domain.x_min;
    const double xb = domain.x_max;
    if (!(xa < xb) || x0 < xa || x0 > xb)
        throw Error("from_nu: x0 must lie inside [x_min, x_max]");
    const double h_max = 1e-3 * (xb - xa);

    // fixed-step RK4 for f'' = nu f, integrated to both sides of x0
    auto sweep = [&](double target) {
        std::vector<double> xs, fs, dfs;
        const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(target - x0) / h_max)));
        const double h = (target - x0) / steps;
        double x = x0, f = f0_init, g = df0_init;
        xs.push_back(x);
        fs.push_back(f);
        dfs.push_back(g);
        for (int s = 0; s < steps; ++s) {
            const double f_prev = f;
            const double k1f = g, k1g = nu(x) * f;
            const double k2f = g + 0.5 * h * k1g, k2g = nu(x + 0.5 * h) * (f + 0.5 * h * k1f);
            const double k3f = g + 0.5 * h * k2g, k3g = nu(x + 0.5 * h) * (f + 0.5 * h * k2f);
            const double k4f = g + h * k3g, k4g = nu(x + h) * (f + h * k3f);
            f += (h / 6.0) * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
            g += (h / 6.0) * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
            x = x0 + (s + 1) * h;
            if (std::abs(f) < 1e-8 || f * f_prev < 0.0)
                throw SolutionVanishes("from_nu: particular solution vanishes inside the domain");
            xs.push_back(x);
            fs.push_back(f);
            dfs.push_back(g);
        }
        return std::tuple{xs, fs, dfs};
    };

    auto [xs_b, fs_b, dfs_b] = sweep(xa);
    auto [xs_f, fs_f, dfs_f] = sweep(xb);

    auto f_table = std::make_shared<HermiteTable>();
    auto df_table = std::make_shared<HermiteTable>();
    const size_t nb = xs_b.size();
    for (size_t i = nb; i-- > 1;) { // backward sweep reversed, skip duplicate x0
        f_table->x.push_back(xs_b[i]);
        f_table->y.push_back(fs_b[i]);
        f_table->dy.push_back(dfs_b[i]);
    }
    for (size_t i = 0; i < xs_f.size(); ++i) {
        f_table->x.push_back(xs_f[i]);
        f_table->y.push_back(fs_f[i]);
        f_table->dy.push_back(dfs_f[i]);
    }
    df_table->x = f_table->x;
    df_table->y = f_table->dy;
    df_table->dy.resize(df_table->x.size());
    for (size_t i = 0; i < df_table->x.size(); ++i)
        df_table->dy[i] = nu(df_table->x[i]) * f_table->y[i]; // f'' = nu f

    PotentialModel md;
    md.p_ = [f_table, df_table](double x) { return df_table->eval(x) / f_table->eval(x); };
    md.P_ = [f_table](double x) { return std::log(std::abs(f_table->eval(x))); };
    md.dp_ = [f_table, df_table, nu](double x) {
        const double p = df_table->eval(x) / f_table->eval(x);
        return nu(x) - p * p; // p' = f''/f - (f'/f)^2
    };
    md.m_ = 0.0;
    md.omega_ = omega;
    md.domain_ = domain;
    md.provenance_ = "from_nu";
    return md;
}

SchrodingerPotentials nu_potentials(const PotentialModel& model) {
    const auto p = [model](double x) { return model.p(x); };
    const auto dp = [model](double x) { return model.dp(x); };
    const double m = model.mass();
    const Complex w2 = model.omega() * model.omega();
    SchrodingerPotentials sp;
    sp.nu1 = [p, dp, m, w2](double x) {
        const double pm = p(x) + m;
        return Complex(dp(x) + pm * pm, 0.0) - w2;
    };
    sp.nu2 = [p, dp, m, w2](double x) {
        const double pm = p(x) + m;
        return Complex(-dp(x) + pm * pm, 0.0) - w2;
    };
    return sp;
}

Complex schrodinger_residual(const std::function<Complex(Point)>& u,
                             const std::function<Complex(double)>& nu, Point z, double h,
                             double tol) {
    auto residual_at = [&](double step) {
        auto lap_axis = [&](bool along_x) {
            auto sample = [&](double t) {
                return along_x ? u(Point{t, z.y}) : u(Point{z.x, t});
            };
            const double t0 = along_x ? z.x : z.y;
            return (-sample(t0 + 2.0 * step) + 16.0 * sample(t0 + step) - 30.0 * sample(t0) +
                    16.0 * sample(t0 - step) - sample(t0 - 2.0 * step)) /
                   (12.0 * step * step);
        };
        return -(lap_axis(true) + lap_axis(false)) + nu(z.x) * u(z);
    };
    const Complex r = residual_at(h);
    if (std::isfinite(tol)) {
        const Complex r2 = residual_at(0.5 * h);
        if (std::abs(r - r2) / 15.0 > tol)
            throw StepTooLarge("schrodinger_residual: Richardson estimate exceeds tolerance");
        return r2;
    }
    return r;
}

ConjugateReport conjugate_parts_check(const std::function<Bicomplex(Point)>& W,
                                      const PotentialModel& model, const GridSpec& grid,
                                      double h) {
    const SchrodingerPotentials sp = nu_potentials(model);
    auto u1 = [&W](Point z) { return W(z).sc; };
    auto u2 = [&W](Point z) { return W(z).vec; };
    ConjugateReport rep;
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            const Point z = grid.at(i, j);
            rep.max_residual_sc =
                std::max(rep.max_residual_sc, std::abs(schrodinger_residual(u1, sp.nu1, z, h)));
            rep.max_residual_vec =
                std::max(rep.max_residual_vec, std::abs(schrodinger_residual(u2, sp.nu2, z, h)));
        }
    }
    return rep;
}

} // namespace vekua
