#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypsurf/polygon.hpp"
#include "test_support.hpp"

using namespace hypsurf;
using hypsurf::testing::hyperboloid_midpoint;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("regular polygon angles and area") {
    const HyperbolicPolygon oct = regular_polygon(2);
    CHECK(oct.vertices().size() == 8);
    for (double a : interior_angles(oct.vertices())) CHECK(std::abs(a - kPi / 4) < 1e-10);
    CHECK(std::abs(polygon_area(oct) - 4 * kPi) < 1e-8);

    const HyperbolicPolygon twelve = regular_polygon(3);
    CHECK(twelve.vertices().size() == 12);
    for (double a : interior_angles(twelve.vertices())) CHECK(std::abs(a - kPi / 6) < 1e-10);
    CHECK(std::abs(polygon_area(twelve) - 8 * kPi) < 1e-8);

    CHECK_THROWS_AS(regular_polygon(1), GenusTooSmall);
    CHECK_THROWS_AS(regular_polygon(0), GenusTooSmall);
}

TEST_CASE("bisected radius matches the right-triangle formula") {
    // cosh R = cot(pi / n) cot(alpha / 2), disk radius tanh(R / 2)
    for (int g = 2; g <= 6; ++g) {
        const int n = 4 * g;
        const double alpha = 2 * kPi / n;
        const double big_r = std::acosh(1.0 / std::tan(kPi / n) / std::tan(alpha / 2));
        CHECK(std::abs(regular_polygon_disk_radius(n, alpha) - std::tanh(big_r / 2)) < 1e-12);
    }
    CHECK_THROWS(regular_polygon_disk_radius(8, kPi));
}

TEST_CASE("polygon constructor enforces the angle conditions") {
    const HyperbolicPolygon oct = regular_polygon(2);
    std::vector<HPoint> verts(oct.vertices().begin(), oct.vertices().end());
    CHECK_NOTHROW(HyperbolicPolygon(verts, 2));
    CHECK_THROWS(HyperbolicPolygon(verts, 3));
    verts[3] = HPoint(verts[3].x() + 0.01, verts[3].y());
    CHECK_THROWS(HyperbolicPolygon(verts, 2));
}

TEST_CASE("area by quadrature") {
    const HyperbolicPolygon oct = regular_polygon(2);
    CHECK(std::abs(polygon_area_quadrature(oct.vertices(), HPoint::i()) - 4 * kPi) < 1e-4);
    const HyperbolicPolygon g3 = regular_polygon(3);
    CHECK(std::abs(polygon_area_quadrature(g3.vertices(), HPoint::i()) - 8 * kPi) < 1e-4);
    // off-center interior point
    CHECK(std::abs(polygon_area_quadrature(oct.vertices(), HPoint(0.1, 1.3)) - 4 * kPi) < 1e-4);

    SUBCASE("generic triangle") {
        const std::vector<HPoint> tri{HPoint(-1.0, 1.0), HPoint(1.0, 0.5), HPoint(0.2, 2.5)};
        const HPoint c((tri[0].z() + tri[1].z() + tri[2].z()) / 3.0);
        CHECK(std::abs(polygon_area_quadrature(tri, c, 128) - polygon_area(tri)) < 1e-6);
    }
}

TEST_CASE("tiny triangles have vanishing area") {
    double previous = 1.0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const std::vector<HPoint> tri{HPoint(0.0, 1.0), HPoint(eps, 1.0), HPoint(0.0, 1.0 + eps)};
        const double area = polygon_area(tri);
        CHECK(area >= -1e-12);
        CHECK(area < previous);
        CHECK(area < eps * eps);
        previous = area;
    }
}

TEST_CASE("segment_isometry") {
    const HPoint p(0.3, 0.8), q(-1.0, 2.0);
    const Mat2 m = segment_isometry(p, q, p, q);
    CHECK(frobenius_distance(m, Mat2::identity()) < 1e-12);
    // move [p, q] by a known isometry and recover it
    const Mat2 g = rotation(0.9) * scaling(1.7);
    const Mat2 found = segment_isometry(p, q, mobius_act(g, p), mobius_act(g, q));
    CHECK(std::min(frobenius_distance(found, g), frobenius_distance(found, -g)) < 1e-12);
}

TEST_CASE("side pairings") {
    for (int g = 2; g <= 4; ++g) {
        CAPTURE(g);
        const HyperbolicPolygon poly = regular_polygon(g);
        const auto maps = side_pairing_maps(poly);
        REQUIRE(maps.size() == static_cast<std::size_t>(2 * g));
        CHECK(maps[0].label == "a1");
        CHECK(maps[1].label == "b1");

        for (const SidePairing& sp : maps) {
            CHECK(classify(sp.map).kind == IsometryClass::Hyperbolic);
            const HPoint src_mid = hyperboloid_midpoint(poly.vertex(sp.source_side), poly.vertex(sp.source_side + 1));
            const HPoint dst_mid = hyperboloid_midpoint(poly.vertex(sp.target_side), poly.vertex(sp.target_side + 1));
            CHECK(hyp_distance(mobius_act(sp.map, src_mid), dst_mid) < 1e-8);
            // Sides a and a^-1 are not opposite, so the axis misses the
            // midpoints: their displacement exceeds the translation length,
            // which is attained on the axis itself.
            const double translation = 2.0 * std::acosh(std::abs(sp.map.trace()) / 2.0);
            CHECK(translation < hyp_distance(src_mid, dst_mid));
            const Mat2& m = sp.map;
            const double disc = std::sqrt((m.d() - m.a()) * (m.d() - m.a()) + 4.0 * m.b() * m.c());
            const double f1 = (m.a() - m.d() + disc) / (2.0 * m.c());
            const double f2 = (m.a() - m.d() - disc) / (2.0 * m.c());
            const HPoint on_axis(0.5 * (f1 + f2), 0.5 * std::abs(f1 - f2));
            CHECK(std::abs(hyp_distance(on_axis, mobius_act(m, on_axis)) - translation) < 1e-7);
        }

        const Representation rep = side_pairings(poly);
        CHECK(rep.validated());
        CHECK(frobenius_distance(rep.relation_product(), Mat2::identity()) < 1e-8);
        CHECK(std::abs(toledo(rep).value) == 2 * g - 2);

        const auto cycle = vertex_cycle(poly, maps);
        CHECK(cycle.size() == static_cast<std::size_t>(4 * g + 1));
        CHECK(hyp_distance(cycle.front(), cycle.back()) < 1e-6);
    }
}

TEST_CASE("Gauss-Bonnet area equals 2 pi |tau|") {
    for (int g = 2; g <= 4; ++g) {
        const HyperbolicPolygon poly = regular_polygon(g);
        const double area = polygon_area(poly);
        CHECK(std::abs(area - 2 * kPi * (2 * g - 2)) < 1e-8);
        // area of the closed surface is -2 pi chi = 2 pi (2g - 2) = 2 pi |tau|
        CHECK(std::abs(area - 2 * kPi * std::abs(toledo(side_pairings(poly)).value)) < 1e-8);
    }
}
