#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "vekua/errors.hpp"

namespace vekua {

using Complex = std::complex<double>;

/// Bicomplex number q = sc + vec*k, where sc and vec are complex over i,
/// k*k = -1 and i commutes with k. A commutative ring with zero divisors:
/// q * conj(q) = sc^2 + vec^2 is a pure complex scalar.
struct Bicomplex {
    Complex sc{0.0, 0.0};  // coefficient of 1
    Complex vec{0.0, 0.0}; // coefficient of k

    constexpr Bicomplex() = default;
    constexpr Bicomplex(double s) : sc(s), vec(0.0) {}
    constexpr Bicomplex(const Complex& s) : sc(s), vec(0.0) {}
    constexpr Bicomplex(const Complex& s, const Complex& v) : sc(s), vec(v) {}

    static constexpr Bicomplex unit_k() { return {Complex(0.0), Complex(1.0)}; }

    bool finite() const {
        return std::isfinite(sc.real()) && std::isfinite(sc.imag()) &&
               std::isfinite(vec.real()) && std::isfinite(vec.imag());
    }
};

inline Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return {a.sc + b.sc, a.vec + b.vec};
}
inline Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return {a.sc - b.sc, a.vec - b.vec};
}
inline Bicomplex operator-(const Bicomplex& a) { return {-a.sc, -a.vec}; }

// (a0 + a1 k)(b0 + b1 k) = (a0 b0 - a1 b1) + (a0 b1 + a1 b0) k
inline Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    return {a.sc * b.sc - a.vec * b.vec, a.sc * b.vec + a.vec * b.sc};
}
inline Bicomplex operator*(const Complex& c, const Bicomplex& q) {
    return {c * q.sc, c * q.vec};
}
inline Bicomplex operator*(const Bicomplex& q, const Complex& c) { return c * q; }
inline Bicomplex operator*(double c, const Bicomplex& q) { return Complex(c) * q; }
inline Bicomplex operator*(const Bicomplex& q, double c) { return Complex(c) * q; }
inline Bicomplex operator/(const Bicomplex& q, const Complex& c) {
    return {q.sc / c, q.vec / c};
}
inline Bicomplex operator/(const Bicomplex& q, double c) { return q / Complex(c); }

inline Bicomplex& operator+=(Bicomplex& a, const Bicomplex& b) { a = a + b; return a; }
inline Bicomplex& operator-=(Bicomplex& a, const Bicomplex& b) { a = a - b; return a; }
inline Bicomplex& operator*=(Bicomplex& a, const Bicomplex& b) { a = a * b; return a; }

/// Bicomplex conjugation (k -> -k); does not touch i.
inline Bicomplex conj(const Bicomplex& q) { return {q.sc, -q.vec}; }

/// q * conj(q) = sc^2 + vec^2, the complex "modulus square" whose vanishing
/// characterizes zero divisors.
inline Complex modulus_sq(const Bicomplex& q) { return q.sc * q.sc + q.vec * q.vec; }

/// Euclidean norm sqrt(|sc|^2 + |vec|^2).
inline double norm(const Bicomplex& q) {
    return std::sqrt(std::norm(q.sc) + std::norm(q.vec));
}

inline bool approx_equal(const Bicomplex& a, const Bicomplex& b, double tol) {
    return norm(a - b) <= tol;
}

/// Membership test for the zero-divisor set S: nonzero q with
/// sc^2 + vec^2 = 0 (equivalently vec = +-i*sc). Relative tolerance:
/// |sc^2+vec^2| <= tol*|q|^2; the set has measure zero, so exact
/// floating-point membership is meaningless.
inline bool is_zero_divisor(const Bicomplex& q, double tol = 1e-10) {
    const double n = norm(q);
    if (n <= tol) return false; // zero is excluded from S
    return std::abs(modulus_sq(q)) <= tol * n * n;
}

/// Multiplicative inverse conj(q)/(sc^2+vec^2).
/// Throws ZeroDivisorOrZero when q lies in S u {0} within tolerance.
inline Bicomplex inverse(const Bicomplex& q, double tol = 1e-10) {
    const Complex m2 = modulus_sq(q);
    const double n = norm(q);
    if (std::abs(m2) <= tol * n * n || n == 0.0)
        throw ZeroDivisorOrZero("bicomplex inverse: argument is zero or a zero divisor");
    const Bicomplex c = conj(q);
    return {c.sc / m2, c.vec / m2};
}

inline Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) {
    return a * inverse(b);
}

/// exp(sc + vec*k) = e^sc (cos(vec) + k sin(vec)), complex-argument cos/sin.
inline Bicomplex exp(const Bicomplex& q) {
    const Complex e = std::exp(q.sc);
    return {e * std::cos(q.vec), e * std::sin(q.vec)};
}

enum class ProjSign { plus, minus };

/// Idempotent projectors P+ = (1 + i k)/2 and P- = (1 - i k)/2.
inline Bicomplex projector(ProjSign sign) {
    const Complex i(0.0, 1.0);
    const Complex half(0.5, 0.0);
    return {half, sign == ProjSign::plus ? half * i : -half * i};
}

/// P+- * q.
inline Bicomplex project(const Bicomplex& q, ProjSign sign) {
    return projector(sign) * q;
}

inline std::ostream& operator<<(std::ostream& os, const Bicomplex& q) {
    return os << "(" << q.sc << " + " << q.vec << "*k)";
}

} // namespace vekua
