#include "hypsurf/cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hypsurf {

namespace {

const HPoint kI = HPoint::i();

// The modulus of phi is redundant with the matrix; recompute it so only the
// winding accumulates rounding.
Complex with_renormalized_modulus(const Mat2& m, Complex phi) {
    return {std::log(std::abs(j_cocycle(m, kI))), phi.imag()};
}

}  // namespace

CoverElement::CoverElement(const Mat2& matrix, Complex phi_i, double exp_tol)
    : matrix_(matrix), phi_i_(phi_i) {
    const double scale = std::max(1.0, std::abs(j_cocycle(matrix, kI)));
    const double err = exp_residual(*this);
    if (!(err <= exp_tol * scale)) {
        std::ostringstream msg;
        msg << "exp(phi(i)) misses j(A, i) by " << err;
        throw InvalidCoverElement(msg.str());
    }
}

CoverElement CoverElement::raw(const Mat2& matrix, Complex phi_i) noexcept {
    CoverElement e;
    e.matrix_ = matrix;
    e.phi_i_ = phi_i;
    return e;
}

CoverElement lift(const Mat2& m, long k) {
    const Complex j = j_cocycle(m, kI);
    const double theta = std::arg(j) + 2.0 * std::numbers::pi * static_cast<double>(k);
    return {m, Complex{std::log(std::abs(j)), theta}};
}

Complex phi_at(const CoverElement& e, const HPoint& z) {
    const Mat2& m = e.matrix();
    return e.phi_i() + std::log(j_cocycle(m, z) / j_cocycle(m, kI));
}

CoverElement cover_mul(const CoverElement& lhs, const CoverElement& rhs) {
    const Mat2 m = lhs.matrix() * rhs.matrix();
    const Complex phi = phi_at(lhs, mobius_act(rhs.matrix(), kI)) + rhs.phi_i();
    return CoverElement::raw(m, with_renormalized_modulus(m, phi));
}

CoverElement cover_inv(const CoverElement& e) {
    const Mat2 m = e.matrix().inverse();
    const Complex phi = -phi_at(e, mobius_act(m, kI));
    return CoverElement::raw(m, with_renormalized_modulus(m, phi));
}

CoverElement cover_commutator(const CoverElement& a, const CoverElement& b) {
    return a * b * cover_inv(a) * cover_inv(b);
}

double exp_residual(const CoverElement& e) noexcept {
    return std::abs(std::exp(e.phi_i()) - j_cocycle(e.matrix(), kI));
}

KernelValue kernel_value(const CoverElement& e, double kernel_tol) {
    const double mres = frobenius_distance(e.matrix(), Mat2::identity());
    if (!(mres <= kernel_tol)) {
        std::ostringstream msg;
        msg << "matrix part is " << mres << " away from the identity";
        throw NotInKernel(msg.str());
    }
    const double two_pi = 2.0 * std::numbers::pi;
    const double k = std::round(e.phi_i().imag() / two_pi);
    const double residual = std::abs(e.phi_i() - Complex{0.0, two_pi * k});
    return {static_cast<long>(k), residual, mres};
}

}  // namespace hypsurf
