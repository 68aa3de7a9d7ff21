#include "hypsurf/mobius.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hypsurf {

Mat2::Mat2(double a, double b, double c, double d, double det_tol) : a_(a), b_(b), c_(c), d_(d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw InvalidMatrix("matrix entries must be finite");
    }
    if (std::abs(det() - 1.0) > det_tol) {
        std::ostringstream msg;
        msg << "determinant " << det() << " differs from 1 by more than " << det_tol;
        throw InvalidMatrix(msg.str());
    }
}

Mat2 Mat2::raw(double a, double b, double c, double d) noexcept {
    Mat2 m;
    m.a_ = a;
    m.b_ = b;
    m.c_ = c;
    m.d_ = d;
    return m;
}

Mat2 operator*(const Mat2& l, const Mat2& r) noexcept {
    double a = l.a_ * r.a_ + l.b_ * r.c_;
    double b = l.a_ * r.b_ + l.b_ * r.d_;
    double c = l.c_ * r.a_ + l.d_ * r.c_;
    double d = l.c_ * r.b_ + l.d_ * r.d_;
    const double det = a * d - b * c;
    if (det > 0.0 && det != 1.0) {
        const double s = 1.0 / std::sqrt(det);
        a *= s;
        b *= s;
        c *= s;
        d *= s;
    }
    return Mat2::raw(a, b, c, d);
}

double frobenius_distance(const Mat2& l, const Mat2& r) noexcept {
    const double da = l.a_ - r.a_;
    const double db = l.b_ - r.b_;
    const double dc = l.c_ - r.c_;
    const double dd = l.d_ - r.d_;
    return std::sqrt(da * da + db * db + dc * dc + dd * dd);
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", " << m.d() << "]]";
}

Mat2 commutator(const Mat2& a, const Mat2& b) noexcept {
    return a * b * a.inverse() * b.inverse();
}

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidPoint("point coordinates must be finite");
    if (!(y > 0.0)) throw InvalidPoint("point must lie in the upper half-plane (y > 0)");
}

std::ostream& operator<<(std::ostream& os, const HPoint& p) {
    return os << p.x() << (p.y() < 0 ? " - " : " + ") << std::abs(p.y()) << "i";
}

const char* to_string(IsometryClass kind) noexcept {
    switch (kind) {
        case IsometryClass::Identity: return "Identity";
        case IsometryClass::Elliptic: return "Elliptic";
        case IsometryClass::Parabolic: return "Parabolic";
        case IsometryClass::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

Complex j_cocycle(const Mat2& m, const HPoint& z) noexcept {
    return {m.c() * z.x() + m.d(), m.c() * z.y()};
}

HPoint mobius_act(const Mat2& m, const HPoint& z) {
    const double x = z.x();
    const double y = z.y();
    const double den_re = m.c() * x + m.d();
    const double den_im = m.c() * y;
    const double den2 = den_re * den_re + den_im * den_im;
    if (!(den2 > kDenominatorTolerance)) throw DegenerateDenominator("cz + d vanishes");
    const double re = ((m.a() * x + m.b()) * den_re + m.a() * m.c() * y * y) / den2;
    const double im = m.det() * y / den2;
    return {re, im};
}

Classification classify(const Mat2& m, double trace_tol) noexcept {
    const double tr = m.trace();
    if (frobenius_distance(m, Mat2::identity()) <= trace_tol ||
        frobenius_distance(m, -Mat2::identity()) <= trace_tol) {
        return {IsometryClass::Identity, tr, true};
    }
    const double gap = std::abs(tr) - 2.0;
    const bool confident = std::abs(gap) > 10.0 * trace_tol;
    if (gap < -trace_tol) return {IsometryClass::Elliptic, tr, confident};
    if (gap > trace_tol) return {IsometryClass::Hyperbolic, tr, confident};
    return {IsometryClass::Parabolic, tr, false};
}

double hyp_distance(const HPoint& z, const HPoint& w) noexcept {
    const double dx = z.x() - w.x();
    const double dy = z.y() - w.y();
    const double u = (dx * dx + dy * dy) / (2.0 * z.y() * w.y());
    // arccosh(1 + u) without the cancellation of 1 + u near zero
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

double path_length(std::span<const HPoint> points) {
    if (points.size() < 2) throw std::invalid_argument("path_length needs at least two points");
    double total = 0.0;
    for (std::size_t k = 1; k < points.size(); ++k) {
        const HPoint& p = points[k - 1];
        const HPoint& q = points[k];
        total += std::hypot(q.x() - p.x(), q.y() - p.y()) / std::sqrt(p.y() * q.y());
    }
    return total;
}

Mat2 rotation(double theta) noexcept {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, -s, s, c};
}

Mat2 scaling(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw NonPositiveScale("scaling factor must be positive");
    return {rho, 0.0, 0.0, 1.0 / rho};
}

Mat2 unipotent(double u) noexcept { return {1.0, u, 0.0, 1.0}; }

Mat2 moving_i_to(const HPoint& p) noexcept {
    const double r = std::sqrt(p.y());
    return {r, p.x() / r, 0.0, 1.0 / r};
}

}  // namespace hypsurf
