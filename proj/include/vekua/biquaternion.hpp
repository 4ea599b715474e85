#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "vekua/bicomplex.hpp"

namespace vekua {

/// Complex quaternion (biquaternion): q = c0 e0 + c1 e1 + c2 e2 + c3 e3 with
/// complex coefficients. e1 e2 = e3 cyclically, ek^2 = -1, and the complex
/// unit i commutes with every ek.
struct Biquaternion {
    Complex c0{0.0}, c1{0.0}, c2{0.0}, c3{0.0};

    constexpr Biquaternion() = default;
    constexpr Biquaternion(const Complex& a0, const Complex& a1,
                           const Complex& a2, const Complex& a3)
        : c0(a0), c1(a1), c2(a2), c3(a3) {}

    static constexpr Biquaternion unit(int k) {
        Biquaternion q;
        switch (k) {
            case 0: q.c0 = 1.0; break;
            case 1: q.c1 = 1.0; break;
            case 2: q.c2 = 1.0; break;
            default: q.c3 = 1.0; break;
        }
        return q;
    }

    Complex scalar() const { return c0; }
};

inline Biquaternion operator+(const Biquaternion& a, const Biquaternion& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
}
inline Biquaternion operator-(const Biquaternion& a, const Biquaternion& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
}
inline Biquaternion operator-(const Biquaternion& a) {
    return {-a.c0, -a.c1, -a.c2, -a.c3};
}
inline Biquaternion operator*(const Complex& s, const Biquaternion& q) {
    return {s * q.c0, s * q.c1, s * q.c2, s * q.c3};
}
inline Biquaternion operator*(double s, const Biquaternion& q) {
    return Complex(s) * q;
}
inline Biquaternion& operator+=(Biquaternion& a, const Biquaternion& b) { a = a + b; return a; }
inline Biquaternion& operator-=(Biquaternion& a, const Biquaternion& b) { a = a - b; return a; }

/// Full noncommutative H(C) product.
inline Biquaternion qmul(const Biquaternion& a, const Biquaternion& b) {
    return {
        a.c0 * b.c0 - a.c1 * b.c1 - a.c2 * b.c2 - a.c3 * b.c3,
        a.c0 * b.c1 + a.c1 * b.c0 + a.c2 * b.c3 - a.c3 * b.c2,
        a.c0 * b.c2 - a.c1 * b.c3 + a.c2 * b.c0 + a.c3 * b.c1,
        a.c0 * b.c3 + a.c1 * b.c2 - a.c2 * b.c1 + a.c3 * b.c0,
    };
}

inline Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
    return qmul(a, b);
}

/// Right-multiplication operator M^p: q -> q * p.
inline Biquaternion right_mul(const Biquaternion& q, const Biquaternion& p) {
    return qmul(q, p);
}

/// Quaternionic conjugation: Sc(q) - Vec(q).
inline Biquaternion qconj(const Biquaternion& q) {
    return {q.c0, -q.c1, -q.c2, -q.c3};
}

inline double norm(const Biquaternion& q) {
    return std::sqrt(std::norm(q.c0) + std::norm(q.c1) +
                     std::norm(q.c2) + std::norm(q.c3));
}

inline bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol) {
    return norm(a - b) <= tol;
}

/// Bicomplex components of q with k identified with e3:
/// Q1 = c0 + c3 k, Q2 = c2 - c1 k, so that q = Q1 + Q2 e2.
inline std::pair<Bicomplex, Bicomplex> split(const Biquaternion& q) {
    return {Bicomplex{q.c0, q.c3}, Bicomplex{q.c2, -q.c1}};
}

/// Inverse of split: q = Q1 + Q2 e2.
inline Biquaternion assemble(const Bicomplex& q1, const Bicomplex& q2) {
    return {q1.sc, -q2.vec, q2.sc, q1.vec};
}

inline std::ostream& operator<<(std::ostream& os, const Biquaternion& q) {
    return os << "[" << q.c0 << ", " << q.c1 << ", " << q.c2 << ", " << q.c3 << "]";
}

} // namespace vekua
