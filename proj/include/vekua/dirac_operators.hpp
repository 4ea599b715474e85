#pragma once

#include <utility>

#include "vekua/fields.hpp"
#include "vekua/gamma.hpp"

namespace vekua {

/// The matrix transform A mapping spinor values to biquaternion values,
/// F = A[Phi] = 1/2 (-(P1-P2) e0 + i(P0-P3) e1 - (P0+P3) e2 + i(P1+P2) e3).
/// Pointwise only: the x3-reflection of the field argument is the caller's
/// responsibility (identity for x3-independent fields).
Biquaternion transform_A(const SpinorValue& phi);

/// Inverse transform, Phi = (-i F1 - F2, -F0 - i F3, F0 - i F3, i F1 - F2)^T.
SpinorValue transform_Ainv(const Biquaternion& F);

/// Moisil-Theodorescu operator D f = sum_k e_k d_k f via 4th-order central
/// differences (or the sampler's exact partials). Richardson estimate
/// between h and h/2 must stay below `tol`, otherwise StepTooLarge.
Biquaternion apply_D(const QuatField& f, const Vec3& x, double tol = 1e-4);

/// Coefficients of R_omega = D + a + M^b evaluated at x; the tilde
/// (x3-reflection) of the potentials is applied internally:
///   a = i(A1~ e1 + A2~ e2 - A3~ e3),
///   b = -i((p_el~ + omega) e1 - i(p_sc~ + m) e2).
Biquaternion coeff_a(const PotentialData& pot, const Vec3& x);
Biquaternion coeff_b(const PotentialData& pot, const Vec3& x);

/// R_omega f = D f + a f + f b at x.
Biquaternion apply_R_omega(const QuatField& f, const Vec3& x, const PotentialData& pot,
                           double tol = 1e-4);

/// Fixed-energy Dirac operator
///   D_omega = i omega gamma0 + sum_k gamma_k d_k + i(m + p_el gamma0 + sum A_k gamma_k + p_sc)
/// applied to a spinor field at x with the configured gamma set.
SpinorValue apply_Dirac_omega(const SpinorField& phi, const Vec3& x, const PotentialData& pot,
                              const GammaSet& gammas, double tol = 1e-4);

/// Residuals of the two bicomplex equations equivalent to R_omega q = 0 for
/// x3-independent fields q = Q1 + Q2 e2:
///   res1 = -D2 conj(Q2) + A1 Q1 - A2 conj(Q2) - conj(B) Q2
///   res2 =  D2 conj(Q1) + A2 conj(Q1) + A1 Q2 + B Q1
/// with D2 = dx - k dy (z = x + y k, x = x2, y = x1), B = -(p_sc+m) + i(p_el+omega) k,
/// A1 = -i A3 k, A2 = i A2 - i A1 k. For A1 == 0 these match the residuals of
/// the decoupled Vekua equations up to bicomplex conjugation.
std::pair<Bicomplex, Bicomplex> vekua_system_residuals(const BicomplexField& Q1,
                                                       const BicomplexField& Q2, Point z,
                                                       const PotentialData& pot);

} // namespace vekua
