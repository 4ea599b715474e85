#pragma once

#include <cmath>
#include <functional>

#include "vekua/bicomplex.hpp"
#include "vekua/biquaternion.hpp"
#include "vekua/spinor.hpp"

namespace vekua {

struct Vec3 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;

    Vec3 reflected() const { return {x1, x2, -x3}; } // x3 -> -x3
    double abs() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
};

/// Point of the z-plane, z = x + y*k.
struct Point {
    double x = 0.0, y = 0.0;

    double abs() const { return std::hypot(x, y); }
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline Bicomplex to_bicomplex(Point p) { return {Complex(p.x), Complex(p.y)}; }

struct Rect {
    double x_min = -2.0, x_max = 2.0, y_min = -2.0, y_max = 2.0;

    bool contains(Point p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

/// Biquaternion-valued field over R^3 with an optional exact partial
/// derivative closure. When `partial` is absent, derivatives fall back to
/// central differences with step h*(1+|x|).
struct QuatField {
    std::function<Biquaternion(const Vec3&)> value;
    std::function<Biquaternion(const Vec3&, int axis)> partial; // optional
    double h = 1e-4;
};

struct SpinorField {
    std::function<SpinorValue(const Vec3&)> value;
    std::function<SpinorValue(const Vec3&, int axis)> partial; // optional
    double h = 1e-4;
};

/// Bicomplex-valued field over the z-plane, optionally with exact partials.
struct BicomplexField {
    std::function<Bicomplex(Point)> value;
    std::function<Bicomplex(Point)> ddx; // optional
    std::function<Bicomplex(Point)> ddy; // optional
    double h = 1e-4;

    bool has_exact_partials() const { return static_cast<bool>(ddx) && static_cast<bool>(ddy); }
};

inline BicomplexField constant_field(const Bicomplex& v) {
    BicomplexField f;
    f.value = [v](Point) { return v; };
    f.ddx = [](Point) { return Bicomplex{}; };
    f.ddy = [](Point) { return Bicomplex{}; };
    return f;
}

/// Potential data of the fixed-energy Dirac operator: mass m, energy omega,
/// electric potential p_el, scalar potential p_sc and magnetic components
/// A_k, all real-valued functions on the working domain.
struct PotentialData {
    double m = 0.0;
    Complex omega{0.0, 0.0};
    std::function<double(const Vec3&)> p_el = [](const Vec3&) { return 0.0; };
    std::function<double(const Vec3&)> p_sc = [](const Vec3&) { return 0.0; };
    std::function<double(const Vec3&)> A1 = [](const Vec3&) { return 0.0; };
    std::function<double(const Vec3&)> A2 = [](const Vec3&) { return 0.0; };
    std::function<double(const Vec3&)> A3 = [](const Vec3&) { return 0.0; };
};

} // namespace vekua
