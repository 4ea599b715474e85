#include "vekua/pseudoanalytic.hpp"

#include <cmath>

#include "vekua/errors.hpp"
#include "vekua/finite_diff.hpp"

namespace vekua {

namespace {

inline Bicomplex times_k(const Bicomplex& q) {
    return {-q.vec, q.sc}; // k (a + b k) = -b + a k
}

Bicomplex diff_axis(const BicomplexField& f, Point z, bool along_x, double h) {
    auto sample = [&](double t) {
        return along_x ? f.value(Point{t, z.y}) : f.value(Point{z.x, t});
    };
    return central_diff4<Bicomplex>(sample, along_x ? z.x : z.y, h);
}

} // namespace

Bicomplex partial_x(const BicomplexField& f, Point z) {
    if (f.ddx) return f.ddx(z);
    return diff_axis(f, z, true, f.h * (1.0 + z.abs()));
}

Bicomplex partial_y(const BicomplexField& f, Point z) {
    if (f.ddy) return f.ddy(z);
    return diff_axis(f, z, false, f.h * (1.0 + z.abs()));
}

Bicomplex dbar(const BicomplexField& f, Point z) {
    return partial_x(f, z) + times_k(partial_y(f, z));
}

Bicomplex dz(const BicomplexField& f, Point z) {
    return partial_x(f, z) - times_k(partial_y(f, z));
}

namespace {

Bicomplex d_checked(const BicomplexField& f, Point z, double tol, bool bar) {
    if (f.has_exact_partials()) return bar ? dbar(f, z) : dz(f, z);
    const double h = f.h * (1.0 + z.abs());
    auto eval = [&](double step) {
        const Bicomplex px = diff_axis(f, z, true, step);
        const Bicomplex py = diff_axis(f, z, false, step);
        return bar ? px + times_k(py) : px - times_k(py);
    };
    const Bicomplex dh = eval(h);
    const Bicomplex dh2 = eval(0.5 * h);
    if (norm(dh - dh2) / 15.0 > tol)
        throw StepTooLarge("dbar/dz: Richardson estimate exceeds tolerance");
    return dh2;
}

} // namespace

Bicomplex dbar_checked(const BicomplexField& f, Point z, double tol) {
    return d_checked(f, z, tol, true);
}

Bicomplex dz_checked(const BicomplexField& f, Point z, double tol) {
    return d_checked(f, z, tol, false);
}

Complex pair_denominator(const GeneratingPair& pair, Point z, double tol) {
    const Bicomplex F = pair.F.value(z);
    const Bicomplex G = pair.G.value(z);
    // Vec(conj(F) G) = F_sc G_vec - F_vec G_sc
    const Complex den = F.sc * G.vec - F.vec * G.sc;
    if (std::abs(den) <= tol * norm(F) * norm(G) || (norm(F) == 0.0 && norm(G) == 0.0))
        throw DegeneratePair("generating pair degenerate: Vec(conj(F)G) ~ 0");
    return den;
}

void validate_pair(const GeneratingPair& pair, int nx, int ny) {
    const GridSpec grid{pair.domain, nx, ny};
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) pair_denominator(pair, grid.at(i, j));
}

CharCoeffs char_coeffs(const GeneratingPair& pair, Point z) {
    const Complex den = pair_denominator(pair, z);
    const Bicomplex F = pair.F.value(z);
    const Bicomplex G = pair.G.value(z);
    const Bicomplex Fb = dbar(pair.F, z);
    const Bicomplex Gb = dbar(pair.G, z);
    const Bicomplex Fz = dz(pair.F, z);
    const Bicomplex Gz = dz(pair.G, z);
    // F conj(G) - conj(F) G = -2 Vec(conj(F)G) k
    const Bicomplex d{Complex(0.0), -2.0 * den};
    const Bicomplex dinv = inverse(d);
    CharCoeffs cc;
    cc.a = -(conj(F) * Gb - Fb * conj(G)) * dinv;
    cc.b = (F * Gb - Fb * G) * dinv;
    cc.A = -(conj(F) * Gz - Fz * conj(G)) * dinv;
    cc.B = (F * Gz - Fz * G) * dinv;
    return cc;
}

std::pair<Complex, Complex> decompose(const GeneratingPair& pair, const Bicomplex& w, Point z) {
    const Complex det = pair_denominator(pair, z);
    const Bicomplex F = pair.F.value(z);
    const Bicomplex G = pair.G.value(z);
    const Complex phi = (w.sc * G.vec - G.sc * w.vec) / det;
    const Complex psi = (F.sc * w.vec - w.sc * F.vec) / det;
    return {phi, psi};
}

Bicomplex fg_derivative(const GeneratingPair& pair, const BicomplexField& W, Point z) {
    const CharCoeffs cc = char_coeffs(pair, z);
    const Bicomplex Wv = W.value(z);
    const Bicomplex Wz = dz(W, z);
    return 0.5 * (Wz - cc.A * Wv - cc.B * conj(Wv));
}

GeneratingPair adjoint(const GeneratingPair& pair) {
    const BicomplexField F = pair.F;
    const BicomplexField G = pair.G;
    auto dinv_at = [F, G](Point z) {
        const Bicomplex Fv = F.value(z);
        const Bicomplex Gv = G.value(z);
        const Complex den = Fv.sc * Gv.vec - Fv.vec * Gv.sc;
        if (std::abs(den) <= 1e-10 * norm(Fv) * norm(Gv))
            throw DegeneratePair("adjoint: pair degenerate at evaluation point");
        return inverse(Bicomplex{Complex(0.0), -2.0 * den});
    };
    GeneratingPair adj;
    adj.domain = pair.domain;
    adj.F.value = [F, dinv_at](Point z) { return -2.0 * conj(F.value(z)) * dinv_at(z); };
    adj.G.value = [G, dinv_at](Point z) { return 2.0 * conj(G.value(z)) * dinv_at(z); };
    adj.F.h = pair.F.h;
    adj.G.h = pair.G.h;
    return adj;
}

Bicomplex fg_integral(const GeneratingPair& pair, const std::function<Bicomplex(Point)>& W,
                      const Polyline& path, const PanelQuadratureConfig& qc) {
    if (path.vertices.size() < 2) throw Error("fg_integral: polyline needs >= 2 vertices");
    const GeneratingPair adj = adjoint(pair);
    Bicomplex i_gstar, i_fstar;
    for (size_t s = 0; s + 1 < path.vertices.size(); ++s) {
        const Point a = path.vertices[s];
        const Point b = path.vertices[s + 1];
        i_gstar += integrate_segment([&](Point p) { return adj.G.value(p) * W(p); }, a, b, qc);
        i_fstar += integrate_segment([&](Point p) { return adj.F.value(p) * W(p); }, a, b, qc);
    }
    const Point z1 = path.vertices.back();
    pair_denominator(pair, z1); // endpoint must be nondegenerate
    return pair.F.value(z1) * i_gstar.sc + pair.G.value(z1) * i_fstar.sc;
}

Bicomplex vekua_residual(const VekuaCoefficients& coeffs, const BicomplexField& W, Point z) {
    const Bicomplex Wv = W.value(z);
    const Bicomplex Wb = dbar(W, z);
    const Bicomplex a = coeffs.a ? coeffs.a(z) : Bicomplex{};
    const Bicomplex b = coeffs.b ? coeffs.b(z) : Bicomplex{};
    if (coeffs.mode == ConjugationMode::plain) return Wb - a * Wv - b * conj(Wv);
    return Wb - a * Wv - conj(b * Wv);
}

bool is_successor(const GeneratingPair& pred, const GeneratingPair& succ, const GridSpec& grid,
                  double tol) {
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.ny; ++j) {
            const Point z = grid.at(i, j);
            const CharCoeffs c0 = char_coeffs(pred, z);
            const CharCoeffs c1 = char_coeffs(succ, z);
            const double scale = 1.0 + norm(c0.a) + norm(c0.B);
            if (norm(c1.a - c0.a) > tol * scale) return false;
            if (norm(c1.b + c0.B) > tol * scale) return false;
        }
    }
    return true;
}

Bicomplex similarity_factor(const VekuaCoefficients& coeffs,
                            const std::function<Bicomplex(Point)>& w,
                            const SimilarityConfig& cfg, Point z) {
    const Rect& r = cfg.grid.rect;
    const int nx = cfg.grid.nx;
    const int ny = cfg.grid.ny;
    const double wx = (r.x_max - r.x_min) / nx;
    const double wy = (r.y_max - r.y_min) / ny;
    const double area = wx * wy;
    const double excl = cfg.eps_cells * std::hypot(wx, wy);

    Bicomplex acc;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const Point tau{r.x_min + (i + 0.5) * wx, r.y_min + (j + 0.5) * wy};
            const Bicomplex b = coeffs.b ? coeffs.b(tau) : Bicomplex{};
            // b == 0 degenerates gracefully (g loses its conjugate-quotient
            // term); a nonzero zero divisor genuinely breaks the theorem
            if (is_zero_divisor(b))
                throw ZeroDivisorCoefficient(
                    "similarity_factor: b is a zero divisor on the grid");
            if (dist(tau, z) < excl) continue;
            const Bicomplex a = coeffs.a ? coeffs.a(tau) : Bicomplex{};
            const Bicomplex wv = w(tau);
            Bicomplex g;
            if (norm(wv) > cfg.zero_tol && std::abs(modulus_sq(wv)) > cfg.zero_tol)
                g = a + b * conj(wv) * inverse(wv);
            else
                g = a + b;
            const Bicomplex dz_vec{Complex(tau.x - z.x), Complex(tau.y - z.y)};
            acc += g * area * inverse(dz_vec);
        }
    }
    return cfg.kernel_scale * acc;
}

} // namespace vekua
