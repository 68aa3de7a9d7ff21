#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypsurf/mobius.hpp"
#include "hypsurf/surface_rep.hpp"

namespace hypsurf {

inline constexpr double kPolygonAngleTolerance = 1e-8;
inline constexpr double kPairingTolerance = 1e-6;

// Regular hyperbolic 4g-gon with interior angles summing to 2 pi, vertices
// listed counterclockwise in the upper half-plane. Side k joins vertex k to
// vertex k + 1 and the sides carry the labels a_1 b_1 a_1^-1 b_1^-1 ...
class HyperbolicPolygon {
public:
    // Throws std::invalid_argument unless there are 4g vertices whose interior
    // angles agree and sum to 2 pi within kPolygonAngleTolerance.
    HyperbolicPolygon(std::vector<HPoint> vertices, int genus);

    int genus() const noexcept { return genus_; }
    std::span<const HPoint> vertices() const noexcept { return vertices_; }
    const HPoint& vertex(int k) const;  // cyclic index

private:
    std::vector<HPoint> vertices_;
    int genus_;
};

// Interior angles of a counterclockwise polygon with geodesic sides.
std::vector<double> interior_angles(std::span<const HPoint> vertices);

// Euclidean circumradius, in the disk model, of the regular n-gon with the
// given interior angle. Bisection on the decreasing map radius -> angle.
double regular_polygon_disk_radius(int sides, double interior_angle);

HyperbolicPolygon regular_polygon(int genus);

// Gauss-Bonnet: (n - 2) pi minus the angle sum.
double polygon_area(std::span<const HPoint> vertices);
double polygon_area(const HyperbolicPolygon& p);

// Independent check of polygon_area: integrates the area form over the
// polygon with Gauss-Legendre quadrature in geodesic polar coordinates around
// `center`, which must be an interior point from which the polygon is
// star-shaped (true for any interior point of a convex polygon).
double polygon_area_quadrature(std::span<const HPoint> vertices, const HPoint& center,
                               int nodes_per_side = 48);

// The orientation-preserving isometry with p -> p2 and q -> q2. Assumes
// d(p, q) == d(p2, q2); callers verify the endpoints.
Mat2 segment_isometry(const HPoint& p, const HPoint& q, const HPoint& p2, const HPoint& q2);

struct SidePairing {
    std::string label;  // "a1", "b1", ...
    Mat2 map;
    int source_side;
    int target_side;
    // (source vertex, image vertex) for both endpoints
    std::array<std::pair<int, int>, 2> vertex_map;
};

// The 2g side-pairing translations, ordered a_1, b_1, ..., a_g, b_g. a_j carries
// side a_j^-1 onto side a_j and b_j carries side b_j onto side b_j^-1; with
// this choice prod [a_j, b_j] = I holds in SL(2,R). Throws PairingFailed if
// a constructed map misses its target vertices by more than
// kPairingTolerance.
std::vector<SidePairing> side_pairing_maps(const HyperbolicPolygon& p);

Representation side_pairings(const HyperbolicPolygon& p);

// Follows the cycle of glued vertices starting from vertex 0 on side 0,
// applying one side-pairing map per step. Returns the successive images of
// vertex 0; the last entry returns to the first when the gluing closes up.
std::vector<HPoint> vertex_cycle(const HyperbolicPolygon& p, std::span<const SidePairing> pairings);

}  // namespace hypsurf
