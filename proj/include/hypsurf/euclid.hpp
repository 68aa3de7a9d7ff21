#pragma once

#include <span>

namespace hypsurf::euclid {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 l, Vec2 r) { return {l.x + r.x, l.y + r.y}; }
    friend Vec2 operator-(Vec2 l, Vec2 r) { return {l.x - r.x, l.y - r.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    bool operator==(const Vec2&) const = default;
};

double norm(Vec2 v);

// Group of translations by n a + m b. The generators must be linearly
// independent (|det [a b]| > 1e-12).
class LatticeGroup {
public:
    LatticeGroup(Vec2 a, Vec2 b);

    Vec2 a() const noexcept { return a_; }
    Vec2 b() const noexcept { return b_; }

    // (s, t) with p = s a + t b
    Vec2 coordinates(Vec2 p) const noexcept;

private:
    Vec2 a_;
    Vec2 b_;
    double det_;
};

struct Reduced {
    Vec2 point;
    long n;
    long m;
};

// Representative q = p - n a - m b of p in the half-open fundamental
// parallelogram {s a + t b : s, t in [0, 1)}. Basis coordinates within a
// relative 1e-10 of an integer are snapped to it, so reducing a reduced
// point always yields (0, 0).
Reduced reduce(const LatticeGroup& lattice, Vec2 p);

// max over points of |A B A^-1 B^-1 (p) - p|, A and B the generating
// translations applied as maps.
double commutator_check(const LatticeGroup& lattice, std::span<const Vec2> points);

// Euclidean length of a polyline.
double path_length(std::span<const Vec2> points);

}  // namespace hypsurf::euclid
