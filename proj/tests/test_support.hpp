#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hypsurf/mobius.hpp"

namespace hypsurf::testing {

// Determinant-one matrix with every entry in [-5, 5].
inline Mat2 random_sl2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    while (true) {
        const double a = u(rng), b = u(rng), c = u(rng);
        if (std::abs(a) < 0.2) continue;
        const double d = (1.0 + b * c) / a;
        if (std::abs(d) <= 5.0) return {a, b, c, d};
    }
}

inline HPoint random_point(std::mt19937_64& rng, double x_range = 3.0, double y_lo = 0.1, double y_hi = 3.0) {
    std::uniform_real_distribution<double> ux(-x_range, x_range);
    std::uniform_real_distribution<double> uy(y_lo, y_hi);
    return {ux(rng), uy(rng)};
}

// Simpson's rule for the contour integral of dw / w along the segment from
// j(A, i) to j(A, z), written as the t-integral of c (z - i) / (c (i + t (z - i)) + d).
inline std::complex<double> log_increment_quadrature(const Mat2& m, std::complex<double> z, int intervals = 1000) {
    const std::complex<double> i{0.0, 1.0};
    auto f = [&](double t) { return m.c() * (z - i) / (m.c() * (i + t * (z - i)) + m.d()); };
    const double h = 1.0 / intervals;
    std::complex<double> sum = f(0.0) + f(1.0);
    for (int k = 1; k < intervals; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * f(k * h);
    return sum * h / 3.0;
}

// Hyperbolic midpoint through the hyperboloid model.
inline HPoint hyperboloid_midpoint(const HPoint& p, const HPoint& q) {
    const std::complex<double> i{0.0, 1.0};
    auto lift = [&](const HPoint& z) {
        const std::complex<double> w = (z.z() - i) / (z.z() + i);
        const double s = 1.0 - std::norm(w);
        return std::array<double, 3>{(1.0 + std::norm(w)) / s, 2.0 * w.real() / s, 2.0 * w.imag() / s};
    };
    const auto a = lift(p);
    const auto b = lift(q);
    std::array<double, 3> m{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    const double scale = std::sqrt(m[0] * m[0] - m[1] * m[1] - m[2] * m[2]);
    for (double& v : m) v /= scale;
    const std::complex<double> w{m[1] / (1.0 + m[0]), m[2] / (1.0 + m[0])};
    return HPoint(i * (1.0 + w) / (1.0 - w));
}

}  // namespace hypsurf::testing
