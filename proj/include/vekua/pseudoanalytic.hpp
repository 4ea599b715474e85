#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vekua/fields.hpp"
#include "vekua/quadrature.hpp"

namespace vekua {

/// Partial derivatives of a bicomplex field: exact closure when present,
/// otherwise 4th-order central differences with step h*(1+|z|).
Bicomplex partial_x(const BicomplexField& f, Point z);
Bicomplex partial_y(const BicomplexField& f, Point z);

/// dbar = dx + k dy and dz = dx - k dy (no 1/2 factor): the bicomplex
/// counterparts of the quaternionic D2-bar and D2. With this normalization
/// dz dbar = Laplacian and dbar f0 / f0 reproduces the Vekua coefficient of
/// the one-variable scalar-potential model.
Bicomplex dbar(const BicomplexField& f, Point z);
Bicomplex dz(const BicomplexField& f, Point z);

/// Richardson-guarded variants: evaluate with the field step and half of it;
/// throw StepTooLarge when the discrepancy estimate exceeds tol. Fields with
/// exact partials never throw.
Bicomplex dbar_checked(const BicomplexField& f, Point z, double tol);
Bicomplex dz_checked(const BicomplexField& f, Point z, double tol);

/// Pair (F,G) of bicomplex fields with Vec(conj(F)G) != 0 on the domain.
struct GeneratingPair {
    BicomplexField F;
    BicomplexField G;
    Rect domain;
};

/// Values of the characteristic coefficients a, b, A, B of a pair at a point.
struct CharCoeffs {
    Bicomplex a, b, A, B;
};

/// Polyline from vertices.front() to vertices.back(); quadrature is composite
/// Gauss-Legendre per segment.
struct Polyline {
    std::vector<Point> vertices;
};

inline Polyline segment(Point a, Point b) { return Polyline{{a, b}}; }

enum class ConjugationMode {
    plain, // dbar w = a w + b conj(w)
    outer, // dbar W = a W + conj(b W)
};

/// Coefficient fields of a Vekua-type equation.
struct VekuaCoefficients {
    std::function<Bicomplex(Point)> a;
    std::function<Bicomplex(Point)> b;
    ConjugationMode mode = ConjugationMode::plain;
};

/// Vec(conj(F)G) at z; DegeneratePair is raised by the operations below when
/// this is zero or a numerical zero divisor relative to |F||G|.
Complex pair_denominator(const GeneratingPair& pair, Point z, double tol = 1e-10);

struct GridSpec;

/// Checks Vec(conj(F)G) != 0 on a sample grid over the pair's domain;
/// throws DegeneratePair at the first failing node.
void validate_pair(const GeneratingPair& pair, int nx = 9, int ny = 9);

/// The four quotients a_(F,G), b_(F,G), A_(F,G), B_(F,G) computed with the
/// un-halved dbar/dz operators (so b of the scalar-potential pair equals the
/// Vekua coefficient (p+m) + i omega k directly).
CharCoeffs char_coeffs(const GeneratingPair& pair, Point z);

/// Unique representation w = phi F + psi G with complex scalars phi, psi.
std::pair<Complex, Complex> decompose(const GeneratingPair& pair, const Bicomplex& w, Point z);

/// (F,G)-derivative of W at z:  (W_z - A W - B conj(W)) / 2.
/// The 1/2 pairs the un-halved characteristic coefficients with the
/// prefactor-free integral so that the derivative is classically normalized
/// (pair (1,k): z^2 -> 2z) and antiderivative/differential relations hold.
Bicomplex fg_derivative(const GeneratingPair& pair, const BicomplexField& W, Point z);

/// Adjoint pair F* = -2 conj(F)/(F conj(G) - conj(F) G), G* = 2 conj(G)/(...).
GeneratingPair adjoint(const GeneratingPair& pair);

/// (F,G)-integral over a polyline ending at z1:
///   F(z1) Sc int G* W dz + G(z1) Sc int F* W dz,   dz = dx + k dy,
/// composite Gauss-Legendre per segment with panel doubling. The 1/2
/// prefactor of the printed definition is dropped; the classical pair (1,k)
/// then integrates W == 1 to z exactly.
Bicomplex fg_integral(const GeneratingPair& pair, const std::function<Bicomplex(Point)>& W,
                      const Polyline& path, const PanelQuadratureConfig& qc = {});

/// Residual dbar W - a W - b conj(W) (plain) or dbar W - a W - conj(b W) (outer).
Bicomplex vekua_residual(const VekuaCoefficients& coeffs, const BicomplexField& W, Point z);

/// Sampling grid over a rectangle.
struct GridSpec {
    Rect rect;
    int nx = 16, ny = 16;

    Point at(int i, int j) const {
        const double fx = nx > 1 ? static_cast<double>(i) / (nx - 1) : 0.5;
        const double fy = ny > 1 ? static_cast<double>(j) / (ny - 1) : 0.5;
        return {rect.x_min + fx * (rect.x_max - rect.x_min),
                rect.y_min + fy * (rect.y_max - rect.y_min)};
    }
};

/// True iff a_(succ) = a_(pred) and b_(succ) = -B_(pred) at every grid point
/// within tol.
bool is_successor(const GeneratingPair& pred, const GeneratingPair& succ, const GridSpec& grid,
                  double tol = 1e-8);

/// Similarity-principle exponent
///   h(z) = kernel_scale * sum_cells g(tau) area / (tau - z),
/// midpoint rule over a uniform grid with cells within eps_cells cell
/// diagonals of z excluded; g = a + b conj(w)/w where |w| is above
/// zero_tol, a + b otherwise. Low-accuracy by construction; intended for
/// the qualitative residual-reduction check. Throws ZeroDivisorCoefficient
/// if b is zero or a zero divisor at any grid node.
struct SimilarityConfig {
    GridSpec grid;
    double eps_cells = 1.5;
    double kernel_scale = 1.0 / (2.0 * 3.14159265358979323846);
    double zero_tol = 1e-12;
};

Bicomplex similarity_factor(const VekuaCoefficients& coeffs,
                            const std::function<Bicomplex(Point)>& w,
                            const SimilarityConfig& cfg, Point z);

} // namespace vekua
