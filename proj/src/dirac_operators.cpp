#include "vekua/dirac_operators.hpp"

#include "vekua/errors.hpp"
#include "vekua/finite_diff.hpp"
#include "vekua/pseudoanalytic.hpp"

namespace vekua {

Biquaternion transform_A(const SpinorValue& phi) {
    const Complex i(0.0, 1.0);
    const Complex half(0.5, 0.0);
    return {
        -half * (phi[1] - phi[2]),
        i * half * (phi[0] - phi[3]),
        -half * (phi[0] + phi[3]),
        i * half * (phi[1] + phi[2]),
    };
}

SpinorValue transform_Ainv(const Biquaternion& F) {
    const Complex i(0.0, 1.0);
    SpinorValue phi;
    phi[0] = -i * F.c1 - F.c2;
    phi[1] = -F.c0 - i * F.c3;
    phi[2] = F.c0 - i * F.c3;
    phi[3] = i * F.c1 - F.c2;
    return phi;
}

namespace {

Biquaternion partial_axis(const QuatField& f, const Vec3& x, int axis, double tol) {
    if (f.partial) return f.partial(x, axis);
    const double h = f.h * (1.0 + x.abs());
    auto sample = [&](double t) {
        Vec3 p = x;
        (axis == 1 ? p.x1 : axis == 2 ? p.x2 : p.x3) = t;
        return f.value(p);
    };
    const double t0 = axis == 1 ? x.x1 : axis == 2 ? x.x2 : x.x3;
    double est = 0.0;
    const Biquaternion d = central_diff4_refined<Biquaternion>(sample, t0, h, &est);
    if (est > tol) throw StepTooLarge("apply_D: Richardson estimate exceeds tolerance");
    return d;
}

SpinorValue spinor_partial_axis(const SpinorField& f, const Vec3& x, int axis, double tol) {
    if (f.partial) return f.partial(x, axis);
    const double h = f.h * (1.0 + x.abs());
    auto sample = [&](double t) {
        Vec3 p = x;
        (axis == 1 ? p.x1 : axis == 2 ? p.x2 : p.x3) = t;
        return f.value(p);
    };
    const double t0 = axis == 1 ? x.x1 : axis == 2 ? x.x2 : x.x3;
    double est = 0.0;
    const SpinorValue d = central_diff4_refined<SpinorValue>(sample, t0, h, &est);
    if (est > tol) throw StepTooLarge("apply_Dirac_omega: Richardson estimate exceeds tolerance");
    return d;
}

} // namespace

Biquaternion apply_D(const QuatField& f, const Vec3& x, double tol) {
    Biquaternion acc;
    for (int axis = 1; axis <= 3; ++axis) {
        acc += qmul(Biquaternion::unit(axis), partial_axis(f, x, axis, tol));
    }
    return acc;
}

Biquaternion coeff_a(const PotentialData& pot, const Vec3& x) {
    const Vec3 xr = x.reflected();
    const Complex i(0.0, 1.0);
    return {Complex(0.0), i * pot.A1(xr), i * pot.A2(xr), -i * pot.A3(xr)};
}

Biquaternion coeff_b(const PotentialData& pot, const Vec3& x) {
    const Vec3 xr = x.reflected();
    const Complex i(0.0, 1.0);
    // b = -i((p_el~ + omega) e1 - i(p_sc~ + m) e2)
    return {Complex(0.0), -i * (pot.p_el(xr) + pot.omega), Complex(-(pot.p_sc(xr) + pot.m)),
            Complex(0.0)};
}

Biquaternion apply_R_omega(const QuatField& f, const Vec3& x, const PotentialData& pot,
                           double tol) {
    const Biquaternion fv = f.value(x);
    return apply_D(f, x, tol) + qmul(coeff_a(pot, x), fv) + qmul(fv, coeff_b(pot, x));
}

SpinorValue apply_Dirac_omega(const SpinorField& phi, const Vec3& x, const PotentialData& pot,
                              const GammaSet& gammas, double tol) {
    const Complex i(0.0, 1.0);
    const SpinorValue v = phi.value(x);
    SpinorValue acc = (i * pot.omega) * (gammas.gamma(0) * v);
    for (int axis = 1; axis <= 3; ++axis)
        acc = acc + gammas.gamma(axis) * spinor_partial_axis(phi, x, axis, tol);
    acc = acc + (i * (pot.m + pot.p_sc(x))) * v;
    acc = acc + (i * pot.p_el(x)) * (gammas.gamma(0) * v);
    const double a_val[3] = {pot.A1(x), pot.A2(x), pot.A3(x)};
    for (int axis = 1; axis <= 3; ++axis)
        acc = acc + (i * a_val[axis - 1]) * (gammas.gamma(axis) * v);
    return acc;
}

std::pair<Bicomplex, Bicomplex> vekua_system_residuals(const BicomplexField& Q1,
                                                       const BicomplexField& Q2, Point z,
                                                       const PotentialData& pot) {
    // z-plane dictionary: x = x_2, y = x_1, fields independent of x_3.
    const Vec3 x3d{z.y, z.x, 0.0};
    const Complex i(0.0, 1.0);
    const Complex a1 = i * pot.A1(x3d);
    const Complex a2 = i * pot.A2(x3d);
    const Complex a3 = -i * pot.A3(x3d);
    const Bicomplex A1{Complex(0.0), a3};
    const Bicomplex A2{a2, -a1};
    const Bicomplex B{Complex(-(pot.p_sc(x3d) + pot.m)), i * (pot.p_el(x3d) + pot.omega)};

    const Bicomplex q1 = Q1.value(z);
    const Bicomplex q2 = Q2.value(z);
    // D2 = dx - k dy; conjugation commutes with the real partials.
    const Bicomplex d2_q1c = conj(partial_x(Q1, z)) - Bicomplex{Complex(0.0), Complex(1.0)} *
                                                          conj(partial_y(Q1, z));
    const Bicomplex d2_q2c = conj(partial_x(Q2, z)) - Bicomplex{Complex(0.0), Complex(1.0)} *
                                                          conj(partial_y(Q2, z));

    const Bicomplex res1 = -d2_q2c + A1 * q1 - A2 * conj(q2) - conj(B) * q2;
    const Bicomplex res2 = d2_q1c + A2 * conj(q1) + A1 * q2 + B * q1;
    return {res1, res2};
}

} // namespace vekua
