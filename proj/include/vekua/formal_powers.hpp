#pragma once

#include <memory>
#include <vector>

#include "vekua/pseudoanalytic.hpp"

namespace vekua {

/// Periodic chain of generating pairs; pair_at(m+1) is a successor of
/// pair_at(m) and pair_at(m + period) == pair_at(m).
class GeneratingSequence {
public:
    explicit GeneratingSequence(std::vector<GeneratingPair> pairs);

    const GeneratingPair& pair_at(int m) const;
    int period() const { return static_cast<int>(pairs_->size()); }

private:
    std::shared_ptr<const std::vector<GeneratingPair>> pairs_;
};

/// Node schedule for the cumulative path quadrature of the power recursion.
/// Prefix sums are Simpson (not Gauss) because every prefix must itself be a
/// valid integral value for the next level.
struct PowerQuadratureConfig {
    int nodes = 513;            // uniform nodes per segment, odd
    double rel_tol = 1e-9;      // doubling target for the top-level value
    int max_nodes = (1 << 14) + 1;
    bool adaptive = true;
};

/// Z_m^(0)(a, z0; z) = lambda F_m(z) + mu G_m(z) with
/// lambda F_m(z0) + mu G_m(z0) = a.
Bicomplex power0(const GeneratingSequence& seq, int m, const Bicomplex& a, Point z0, Point z);

/// Formal power Z_base^(n)(a, z0; z) by the recursion
///   Z_m^(n+1) = (n+1) int_{z0}^{z} Z_{m+1}^(n) d_(F_m,G_m) zeta
/// realized as cumulative prefix quadrature along the straight segment
/// [z0, z] (level l uses the pair with index base + n - l). Path independence
/// licenses the straight segment. `nodes_used` (optional) receives the node
/// count the adaptive doubling settled on.
Bicomplex build_power(const GeneratingSequence& seq, int n, const Bicomplex& a, Point z0,
                      Point z, const PowerQuadratureConfig& qc = {}, int base = 0,
                      int* nodes_used = nullptr);

/// Same recursion along an arbitrary polyline from vertices.front() to
/// vertices.back(); vertices.front() must equal z0.
Bicomplex build_power_path(const GeneratingSequence& seq, int n, const Bicomplex& a,
                           const std::vector<Point>& vertices,
                           const PowerQuadratureConfig& qc = {}, int base = 0);

/// || d_(F0,G0) Z^(n) / dz - n Z_1^(n-1) || at z, with the formal power
/// differentiated numerically at a fixed node count.
double differential_relation_residual(const GeneratingSequence& seq, int n, const Bicomplex& a,
                                      Point z0, Point z, const PowerQuadratureConfig& qc = {},
                                      double fd_step = 1e-4);

struct TaylorExpansion {
    Point z0;
    std::vector<Bicomplex> coefficients; // a_0 .. a_N
};

/// Taylor coefficients a_n = W^[n](z0) / n! with the higher Bers derivatives
/// W^[m+1] = d_(F_m,G_m) W^[m] evaluated by nested differencing (step
/// fd_step per nesting level). Differencing-limited; keep N small.
TaylorExpansion taylor_coefficients(const BicomplexField& W, const GeneratingSequence& seq,
                                    Point z0, int N, double fd_step = 2e-2);

/// Sum of Z^(n)(a_n, z0; z) for n = 0..N.
Bicomplex evaluate_series(const TaylorExpansion& expansion, const GeneratingSequence& seq,
                          Point z, const PowerQuadratureConfig& qc = {});

} // namespace vekua
