#include "hypsurf/euclid.hpp"

#include <algorithm>
#include <cmath>

#include "hypsurf/error.hpp"

namespace hypsurf::euclid {

namespace {

constexpr double kSnap = 1e-10;

// floor, except values a hair below an integer count as that integer
double snapped_floor(double s) {
    const double nearest = std::round(s);
    if (std::abs(s - nearest) <= kSnap * std::max(1.0, std::abs(s))) return nearest;
    return std::floor(s);
}

double snapped_fraction(double s, double whole) {
    const double f = s - whole;
    return f < 0.0 || std::abs(s - std::round(s)) <= kSnap * std::max(1.0, std::abs(s)) ? 0.0 : f;
}

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

LatticeGroup::LatticeGroup(Vec2 a, Vec2 b) : a_(a), b_(b), det_(a.x * b.y - a.y * b.x) {
    if (!(std::abs(det_) > 1e-12)) throw InvalidLattice("lattice generators are linearly dependent");
}

Vec2 LatticeGroup::coordinates(Vec2 p) const noexcept {
    return {(p.x * b_.y - p.y * b_.x) / det_, (a_.x * p.y - a_.y * p.x) / det_};
}

Reduced reduce(const LatticeGroup& lattice, Vec2 p) {
    const Vec2 st = lattice.coordinates(p);
    const double n = snapped_floor(st.x);
    const double m = snapped_floor(st.y);
    const double fs = snapped_fraction(st.x, n);
    const double ft = snapped_fraction(st.y, m);
    return {fs * lattice.a() + ft * lattice.b(), static_cast<long>(n), static_cast<long>(m)};
}

double commutator_check(const LatticeGroup& lattice, std::span<const Vec2> points) {
    const Vec2 a = lattice.a();
    const Vec2 b = lattice.b();
    double worst = 0.0;
    for (Vec2 p : points) {
        // rightmost map acts first
        const Vec2 q = (((p - b) - a) + b) + a;
        worst = std::max(worst, norm(q - p));
    }
    return worst;
}

double path_length(std::span<const Vec2> points) {
    double total = 0.0;
    for (std::size_t k = 1; k < points.size(); ++k) total += norm(points[k] - points[k - 1]);
    return total;
}

}  // namespace hypsurf::euclid
