#pragma once

#include <array>
#include <string>

#include "vekua/spinor.hpp"

namespace vekua {

/// The gamma-matrix set used by the spinor-side Dirac operator.
///
/// Convention: standard Dirac representation, gamma0 = diag(1,1,-1,-1) and
/// gamma_k = [[0, sigma_k], [-sigma_k, 0]]. This is the set under which the
/// intertwining identity with the quaternionic operator holds to machine
/// precision for polynomial fields; the verification suite is the arbiter
/// (flipping the spatial signs is kept available as a negative control).
struct GammaSet {
    std::array<Mat4, 4> g; // gamma0..gamma3
    bool spatial_flipped = false;

    const Mat4& gamma(int k) const { return g[static_cast<size_t>(k)]; }

    /// gamma1*gamma2*gamma3, the prefactor of the spinor-side operator in
    /// the intertwining identity.
    Mat4 spatial_product() const { return g[1] * (g[2] * g[3]); }
};

GammaSet standard_gammas(bool flip_spatial = false);

/// JSON dump of the set (4 matrices x 16 complex entries) for audit.
std::string gamma_set_to_json(const GammaSet& gs);

} // namespace vekua
