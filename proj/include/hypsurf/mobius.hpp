#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <span>

#include "hypsurf/error.hpp"

namespace hypsurf {

using Complex = std::complex<double>;

inline constexpr double kDetTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-8;
inline constexpr double kDenominatorTolerance = 1e-300;

// Real 2x2 matrix of determinant one, acting on the upper half-plane by
// z -> (az + b) / (cz + d). Construction checks the determinant; products are
// renormalized by sqrt(det) so long words do not drift off SL(2,R).
class Mat2 {
public:
    Mat2() = default;
    Mat2(double a, double b, double c, double d, double det_tol = kDetTolerance);

    static Mat2 identity() { return {}; }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }
    std::array<double, 4> entries() const noexcept { return {a_, b_, c_, d_}; }

    double det() const noexcept { return a_ * d_ - b_ * c_; }
    double trace() const noexcept { return a_ + d_; }

    // Exact: the adjugate of a determinant-one matrix.
    Mat2 inverse() const noexcept { return raw(d_, -b_, -c_, a_); }
    Mat2 operator-() const noexcept { return raw(-a_, -b_, -c_, -d_); }

    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs) noexcept;
    bool operator==(const Mat2&) const = default;

    // Frobenius norm of lhs - rhs.
    friend double frobenius_distance(const Mat2& lhs, const Mat2& rhs) noexcept;

private:
    static Mat2 raw(double a, double b, double c, double d) noexcept;

    double a_ = 1.0;
    double b_ = 0.0;
    double c_ = 0.0;
    double d_ = 1.0;
};

double frobenius_distance(const Mat2& lhs, const Mat2& rhs) noexcept;
std::ostream& operator<<(std::ostream& os, const Mat2& m);

// ABA^{-1}B^{-1}
Mat2 commutator(const Mat2& a, const Mat2& b) noexcept;

// Point x + iy of the upper half-plane (y > 0).
class HPoint {
public:
    HPoint(double x, double y);
    explicit HPoint(Complex z) : HPoint(z.real(), z.imag()) {}

    static HPoint i() { return {0.0, 1.0}; }

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    Complex z() const noexcept { return {x_, y_}; }

    bool operator==(const HPoint&) const = default;

private:
    double x_;
    double y_;
};

std::ostream& operator<<(std::ostream& os, const HPoint& p);

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* to_string(IsometryClass kind) noexcept;

struct Classification {
    IsometryClass kind;
    double trace;
    // False when |tr| sits within 10 * eps_tr of 2, where the trichotomy is
    // decided by the tolerance rather than by the matrix.
    bool confident;
};

Complex j_cocycle(const Mat2& m, const HPoint& z) noexcept;
HPoint mobius_act(const Mat2& m, const HPoint& z);
Classification classify(const Mat2& m, double trace_tol = kTraceTolerance) noexcept;

double hyp_distance(const HPoint& z, const HPoint& w) noexcept;

// Midpoint-rule discretization of the hyperbolic length of a polyline:
// each chord's Euclidean length divided by sqrt(y_k * y_{k+1}).
double path_length(std::span<const HPoint> points);

Mat2 rotation(double theta) noexcept;
Mat2 scaling(double rho);
Mat2 unipotent(double u) noexcept;

// Isometry sending i to p (translate-and-scale, upper triangular).
Mat2 moving_i_to(const HPoint& p) noexcept;

}  // namespace hypsurf
