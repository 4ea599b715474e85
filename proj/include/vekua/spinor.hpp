#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "vekua/bicomplex.hpp"

namespace vekua {

/// Value of a C^4-valued spinor field at a point.
struct SpinorValue {
    std::array<Complex, 4> c{};

    Complex& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Complex& operator[](int i) const { return c[static_cast<size_t>(i)]; }
};

inline SpinorValue operator+(const SpinorValue& a, const SpinorValue& b) {
    SpinorValue r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}
inline SpinorValue operator-(const SpinorValue& a, const SpinorValue& b) {
    SpinorValue r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
}
inline SpinorValue operator*(const Complex& s, const SpinorValue& v) {
    SpinorValue r;
    for (int i = 0; i < 4; ++i) r[i] = s * v[i];
    return r;
}
inline SpinorValue operator*(double s, const SpinorValue& v) { return Complex(s) * v; }

inline double norm(const SpinorValue& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]));
}

/// Dense 4x4 complex matrix; just enough linear algebra for the gamma set
/// and the spinor<->biquaternion transforms.
struct Mat4 {
    std::array<std::array<Complex, 4>, 4> m{};

    Complex& operator()(int r, int c) { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const Complex& operator()(int r, int c) const { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    static Mat4 identity() {
        Mat4 I;
        for (int i = 0; i < 4; ++i) I(i, i) = 1.0;
        return I;
    }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline SpinorValue operator*(const Mat4& a, const SpinorValue& v) {
    SpinorValue r;
    for (int i = 0; i < 4; ++i) {
        Complex s = 0.0;
        for (int k = 0; k < 4; ++k) s += a(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

inline Mat4 operator*(const Complex& s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
    return r;
}

inline Mat4 operator-(const Mat4& a) { return Complex(-1.0) * a; }

inline std::ostream& operator<<(std::ostream& os, const SpinorValue& v) {
    return os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ")";
}

} // namespace vekua
