#pragma once

#include <functional>
#include <vector>

#include "vekua/bicomplex.hpp"
#include "vekua/fields.hpp"

namespace vekua {

/// Composite Gauss-Legendre quadrature along one straight segment of the
/// z-plane. Panels are doubled until successive values agree to rel_tol
/// (relative), up to max_nodes total nodes per segment.
struct PanelQuadratureConfig {
    int gl_order = 8;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14; // accepts near-zero integrals the relative test cannot settle
    int max_nodes = 1 << 14;
};

/// Integral of f(z) dz with dz = dx + k dy along the segment [a, b].
Bicomplex integrate_segment(const std::function<Bicomplex(Point)>& f, Point a, Point b,
                            const PanelQuadratureConfig& qc = {});

/// Cumulative Simpson prefix integrals of uniformly sampled values:
/// out[j] = integral over [t_0, t_j] of the quadratic interpolant, t_j = j*dt.
/// Values count must be odd and >= 3. Every prefix is a valid integral value
/// (4th-order at even nodes, one order lower locally at odd nodes).
std::vector<Bicomplex> cumulative_simpson(const std::vector<Bicomplex>& values, double dt);

/// Real-valued variant (used for tabulated antiderivatives).
std::vector<double> cumulative_simpson(const std::vector<double>& values, double dt);

} // namespace vekua
