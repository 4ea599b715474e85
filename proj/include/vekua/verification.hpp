#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vekua {

/// Outcome of one verification check.
struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string details;
};

struct VerifyOptions {
    uint64_t seed = 20240917ull;
    bool gamma_flip = false;
};

/// Intertwining of the spinor-side operator with the quaternionic one on
/// random polynomial spinor fields (degree <= 4) and random constant/linear
/// potentials; pointwise relative residual against 1e-6.
CheckResult check_intertwining(const VerifyOptions& opt, int n_fields = 50);

/// Both generating pairs of the scalar-potential model are successors of each
/// other (period 2), and a deliberately mismatched pair is not.
CheckResult check_successor(const VerifyOptions& opt);

/// Trivial model: Z^(n)(1,0;z) = z^n for n <= 6 on |z| <= 1, rel err 1e-9.
CheckResult check_classical_limit(const VerifyOptions& opt);

/// Constant potential c=0.5, m=1, omega=0.7: quadrature Z^(1) against the
/// closed-form segment integrals, 100 random points in [-1,1]^2, 1e-8.
CheckResult check_closed_form_z1(const VerifyOptions& opt);

/// Outer-mode Vekua residual of Z^(n), n <= 5, at 200 interior points for
/// constant and linear potentials, 1e-5.
CheckResult check_pseudoanalyticity(const VerifyOptions& opt);

/// log-log slope of ||Z^(n) - a(z-z0)^n|| over |z-z0| in [1e-3,1e-1] is
/// at least n + 0.8 for n = 1,2,3.
CheckResult check_asymptotic_order(const VerifyOptions& opt);

/// || d_(F0,G0) Z^(n)/dz - n Z_1^(n-1) || <= 1e-5 for n <= 4.
CheckResult check_differential_relation(const VerifyOptions& opt);

/// Straight segment vs dog-leg polyline agreement <= 1e-6 for levels n <= 3.
CheckResult check_path_independence(const VerifyOptions& opt);

/// Schroedinger residuals of Sc/Vec parts of Z^(n) with nu1/nu2, <= 1e-4.
CheckResult check_schrodinger_conjugate(const VerifyOptions& opt);

/// Taylor coefficients of a 3-power combination recovered to 1e-3 and
/// monotone re-expansion error in N at |z-z0| = 0.05.
CheckResult check_taylor_roundtrip(const VerifyOptions& opt);

/// is_zero_divisor false at 10^4 sampled values of built powers for a model
/// with b bounded away from the zero-divisor set.
CheckResult check_zero_divisor_preservation(const VerifyOptions& opt);

/// || D_omega Phi || <= 1e-4 at 100 interior points for spinors assembled
/// from (W, w) formal powers.
CheckResult check_dirac_residual(const VerifyOptions& opt);

/// Similarity principle, qualitative: || dbar(w e^h) ||_inf <= 0.1 || dbar w ||_inf
/// on a 64x64 grid for a constant-coefficient case.
CheckResult check_similarity(const VerifyOptions& opt);

/// Names accepted by run_checks, in canonical order.
const std::vector<std::string>& all_check_names();

/// Runs the named checks (unknown names raise ConfigError).
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);

} // namespace vekua
