#pragma once

#include "hypsurf/mobius.hpp"

namespace hypsurf {

inline constexpr double kExpTolerance = 1e-9;
inline constexpr double kKernelTolerance = 1e-6;

// Element (A, phi) of the universal cover of SL(2,R): phi is a continuous
// logarithm of z -> j(A, z) on the upper half-plane. A continuous logarithm is
// pinned down by one value, so only phi(i) is stored; its imaginary part
// carries the winding.
class CoverElement {
public:
    // The neutral element (I, 0).
    CoverElement() = default;

    // Checks |exp(phi_i) - j(A, i)| <= exp_tol * max(1, |j(A, i)|).
    CoverElement(const Mat2& matrix, Complex phi_i, double exp_tol = kExpTolerance);

    const Mat2& matrix() const noexcept { return matrix_; }
    Complex phi_i() const noexcept { return phi_i_; }

    friend CoverElement cover_mul(const CoverElement& lhs, const CoverElement& rhs);
    friend CoverElement cover_inv(const CoverElement& e);

private:
    static CoverElement raw(const Mat2& matrix, Complex phi_i) noexcept;

    Mat2 matrix_;
    Complex phi_i_{0.0, 0.0};
};

// phi(i) = ln|j(A,i)| + i (Arg j(A,i) + 2 pi k), Arg principal in (-pi, pi].
CoverElement lift(const Mat2& m, long k = 0);

// Value of the stored determination at z. The segment from j(A,i) to j(A,z)
// is the affine image of [i, z], which never meets 0, so the increment of
// the logarithm along it is the principal Log of the ratio.
Complex phi_at(const CoverElement& e, const HPoint& z);

CoverElement cover_mul(const CoverElement& lhs, const CoverElement& rhs);
CoverElement cover_inv(const CoverElement& e);

inline CoverElement operator*(const CoverElement& lhs, const CoverElement& rhs) {
    return cover_mul(lhs, rhs);
}

CoverElement cover_commutator(const CoverElement& a, const CoverElement& b);

// |exp(phi(i)) - j(A, i)|
double exp_residual(const CoverElement& e) noexcept;

struct KernelValue {
    long k;
    // |phi(i) - 2 pi i k|
    double residual;
    // Frobenius distance of the matrix part from I
    double matrix_residual;
};

// The projection kernel is {(I, 2 pi i k)}; returns k for an element over I.
// Throws NotInKernel if the matrix part is farther than kernel_tol from I.
KernelValue kernel_value(const CoverElement& e, double kernel_tol = kKernelTolerance);

}  // namespace hypsurf
