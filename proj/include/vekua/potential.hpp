#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "vekua/fields.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/pseudoanalytic.hpp"

namespace vekua {

/// One-variable scalar-potential model: p, its antiderivative P, mass m and
/// energy omega. Induces f0 = e^{P(x)+mx+i omega y}, the generating pairs of
/// the two Vekua equations, and the Schroedinger potentials nu1/nu2.
class PotentialModel {
public:
    static PotentialModel zero(double m, Complex omega, Rect domain = {});
    static PotentialModel constant(double c, double m, Complex omega, Rect domain = {});
    static PotentialModel linear(double slope, double m, Complex omega, Rect domain = {});
    static PotentialModel tabulated(std::vector<double> xs, std::vector<double> ps, double m,
                                    Complex omega, Rect domain = {});

    /// Integrates -f0'' + nu f0 = 0 by fixed-step RK4 from x0 across
    /// [domain.x_min, domain.x_max], then p = f0'/f0, P = log|f0|, m = 0.
    /// Throws SolutionVanishes when |f0| drops below 1e-8.
    static PotentialModel from_nu(const std::function<double(double)>& nu, double x0,
                                  double f0_init, double df0_init, Complex omega, Rect domain);

    double p(double x) const { return p_(x); }
    double P(double x) const { return P_(x); }
    double dp(double x) const { return dp_(x); }
    double mass() const { return m_; }
    Complex omega() const { return omega_; }
    const Rect& domain() const { return domain_; }
    const std::string& provenance() const { return provenance_; }

    Complex alpha(double x) const { return Complex(P_(x) + m_ * x, 0.0); }
    Complex sigma(Point z) const { return alpha(z.x) + Complex(0.0, 1.0) * omega_ * z.y; }
    Complex tau(Point z) const { return -alpha(z.x) + Complex(0.0, 1.0) * omega_ * z.y; }

    /// f0(z) = e^{sigma} as a (scalar) bicomplex value.
    Bicomplex f0(Point z) const { return Bicomplex{std::exp(sigma(z))}; }

    /// Vekua coefficient b = p(x) + m - i omega k.
    Bicomplex b_coeff(Point z) const {
        return {Complex(p_(z.x) + m_, 0.0), -Complex(0.0, 1.0) * omega_};
    }

    /// (F,G) = (e^sigma, e^-sigma k): generating pair of dbar W = conj(b W).
    GeneratingPair pair_sigma() const;
    /// (F1,G1) = (e^tau, e^-tau k), the successor of pair_sigma (and vice versa).
    GeneratingPair pair_tau() const;
    /// (e^tau k, -e^-tau): generating pair of dbar w = b conj(w).
    GeneratingPair pair_tau_k() const;
    /// (e^sigma k, -e^-sigma), the successor of pair_tau_k.
    GeneratingPair pair_sigma_k() const;

    /// Period-2 generating sequence for the W-equation (even index: pair_sigma).
    GeneratingSequence sequence_W() const;
    /// Period-2 generating sequence for the w-equation (even index: pair_tau_k).
    GeneratingSequence sequence_w() const;

    /// Coefficients of the W-equation in outer mode (a = 0, b as above).
    VekuaCoefficients coefficients_W() const;
    /// Coefficients of the w-equation in plain mode (a = 0, b as above).
    VekuaCoefficients coefficients_w() const;

private:
    PotentialModel() = default;

    std::function<double(double)> p_, P_, dp_;
    double m_ = 0.0;
    Complex omega_{0.0, 0.0};
    Rect domain_{};
    std::string provenance_ = "preset";

    GeneratingPair exp_pair(double sign_alpha, bool times_k) const;
};

/// nu1(x) = p' + (p+m)^2 - omega^2 and nu2(x) = -p' + (p+m)^2 - omega^2.
struct SchrodingerPotentials {
    std::function<Complex(double)> nu1;
    std::function<Complex(double)> nu2;
};

SchrodingerPotentials nu_potentials(const PotentialModel& model);

/// -Laplacian u + nu(x) u at z via the 4th-order 5-point-per-axis stencil.
/// A finite `tol` adds a Richardson check between h and h/2 and throws
/// StepTooLarge when the stencil has not resolved u.
Complex schrodinger_residual(const std::function<Complex(Point)>& u,
                             const std::function<Complex(double)>& nu, Point z, double h,
                             double tol = std::numeric_limits<double>::infinity());

struct ConjugateReport {
    double max_residual_sc = 0.0;
    double max_residual_vec = 0.0;
};

/// Max over the grid of |-Lap(Sc W) + nu1 Sc W| and |-Lap(Vec W) + nu2 Vec W|.
ConjugateReport conjugate_parts_check(const std::function<Bicomplex(Point)>& W,
                                      const PotentialModel& model, const GridSpec& grid,
                                      double h = 1e-3);

} // namespace vekua
