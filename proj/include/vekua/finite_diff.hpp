#pragma once

namespace vekua {

/// 4th-order central difference of a 1-D sampled function.
/// (-f(t+2h) + 8 f(t+h) - 8 f(t-h) + f(t-2h)) / (12 h)
template <typename V, typename Sampler>
V central_diff4(Sampler&& f, double t, double h) {
    return (1.0 / (12.0 * h)) *
           (-1.0 * f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + 1.0 * f(t - 2.0 * h));
}

/// Same stencil evaluated at h and h/2; returns the h/2 value and writes the
/// Richardson error estimate |d_h - d_{h/2}| / 15 (the stencil is 4th order).
template <typename V, typename Sampler>
V central_diff4_refined(Sampler&& f, double t, double h, double* err_estimate) {
    const V dh = central_diff4<V>(f, t, h);
    const V dh2 = central_diff4<V>(f, t, 0.5 * h);
    if (err_estimate) *err_estimate = norm(dh - dh2) / 15.0;
    return dh2;
}

/// 4th-order second derivative: (-f(t+2h) + 16 f(t+h) - 30 f(t) + 16 f(t-h) - f(t-2h)) / (12 h^2)
template <typename V, typename Sampler>
V second_diff4(Sampler&& f, double t, double h) {
    return (1.0 / (12.0 * h * h)) *
           (-1.0 * f(t + 2.0 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) -
            1.0 * f(t - 2.0 * h));
}

} // namespace vekua
