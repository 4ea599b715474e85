#include "vekua/quadrature.hpp"

#include <array>
#include <cstddef>

#include "vekua/errors.hpp"

namespace vekua {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 4> kGlNodes = {
    0.1834346424956498049394761,
    0.5255324099163289858177390,
    0.7966664774136267395915539,
    0.9602898564975362316835609,
};
constexpr std::array<double, 4> kGlWeights = {
    0.3626837833783619829651504,
    0.3137066458778872873379622,
    0.2223810344533744705443560,
    0.1012285362903762591525314,
};

Bicomplex gl_panels(const std::function<Bicomplex(Point)>& f, Point a, Point b, int panels) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const Bicomplex dz_dt{Complex(dx), Complex(dy)}; // dz = (b - a) dt on [0, 1]
    Bicomplex acc;
    const double w_panel = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * w_panel;
        const double half = 0.5 * w_panel;
        for (size_t i = 0; i < kGlNodes.size(); ++i) {
            for (const double s : {-kGlNodes[i], kGlNodes[i]}) {
                const double t = mid + half * s;
                const Point z{a.x + t * dx, a.y + t * dy};
                acc += (kGlWeights[i] * half) * f(z);
            }
        }
    }
    return acc * dz_dt;
}

} // namespace

Bicomplex integrate_segment(const std::function<Bicomplex(Point)>& f, Point a, Point b,
                            const PanelQuadratureConfig& qc) {
    if (a.x == b.x && a.y == b.y) return {};
    int panels = 1;
    Bicomplex prev = gl_panels(f, a, b, panels);
    while (true) {
        panels *= 2;
        if (panels * 8 > qc.max_nodes)
            throw QuadratureNotConverged("integrate_segment: node cap reached");
        const Bicomplex cur = gl_panels(f, a, b, panels);
        const double diff = norm(cur - prev);
        if (diff <= qc.rel_tol * norm(cur) || diff <= qc.abs_tol) return cur;
        prev = cur;
    }
}

namespace {

template <typename V>
std::vector<V> cumulative_simpson_impl(const std::vector<V>& v, double dt) {
    const size_t n = v.size();
    if (n < 3 || n % 2 == 0)
        throw Error("cumulative_simpson: need an odd number of nodes >= 3");
    std::vector<V> out(n);
    out[0] = V{};
    for (size_t j = 1; j < n; ++j) {
        if (j % 2 == 1) {
            // half-interval of the quadratic through (j-1, j, j+1)
            out[j] = out[j - 1] + (dt / 12.0) * (5.0 * v[j - 1] + 8.0 * v[j] - 1.0 * v[j + 1]);
        } else {
            // pure composite Simpson at even nodes
            out[j] = out[j - 2] + (dt / 3.0) * (v[j - 2] + 4.0 * v[j - 1] + v[j]);
        }
    }
    return out;
}

} // namespace

std::vector<Bicomplex> cumulative_simpson(const std::vector<Bicomplex>& values, double dt) {
    return cumulative_simpson_impl(values, dt);
}

std::vector<double> cumulative_simpson(const std::vector<double>& values, double dt) {
    return cumulative_simpson_impl(values, dt);
}

} // namespace vekua
