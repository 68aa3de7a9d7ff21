#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hypsurf/polygon.hpp"
#include "hypsurf/tiling.hpp"

using namespace hypsurf;

namespace {

std::vector<Mat2> generators(const HyperbolicPolygon& p) {
    std::vector<Mat2> out;
    for (const SidePairing& sp : side_pairing_maps(p)) out.push_back(sp.map);
    return out;
}

// Reduced words of length <= L in a group whose only relator has length 4g,
// so for L < 2g they are pairwise distinct.
int free_ball(int g, int depth) {
    int total = 1, sphere = 4 * g;
    for (int k = 1; k <= depth; ++k) {
        total += sphere;
        sphere *= 4 * g - 1;
    }
    return total;
}

int count(const std::string& haystack, const std::string& needle) {
    int n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("group element balls") {
    for (int g : {2, 3}) {
        const auto gens = generators(regular_polygon(g));
        CHECK(group_elements(gens, 0).size() == 1);
        CHECK(group_elements(gens, 0).front() == Mat2::identity());
        for (int depth = 1; depth <= 3; ++depth) {
            CHECK(group_elements(gens, depth).size() == static_cast<std::size_t>(free_ball(g, depth)));
        }
    }
}

TEST_CASE("group elements are identified up to sign") {
    const std::vector<Mat2> gens{rotation(std::numbers::pi / 2)};
    // r^2 = -I, so the ball is {I, r}: r^-1 = -r
    CHECK(group_elements(gens, 3).size() == 2);
    const std::vector<Mat2> shift{unipotent(1.0)};
    CHECK(group_elements(shift, 3).size() == 7);
}

TEST_CASE("svg structure") {
    const HyperbolicPolygon p = regular_polygon(2);
    const auto gens = generators(p);
    for (int depth = 0; depth <= 3; ++depth) {
        TilingOptions o;
        o.depth = depth;
        const Tiling t = tile_svg(p, gens, o);
        CHECK(t.elements == free_ball(2, depth));
        CHECK(t.tiles_drawn >= 1);
        CHECK(t.tiles_drawn <= t.elements);
        CHECK(t.svg.rfind("<?xml", 0) == 0);
        CHECK(t.svg.find("version=\"1.1\"") != std::string::npos);
        CHECK(t.svg.substr(t.svg.size() - 7) == "</svg>\n");
        CHECK(count(t.svg, "<path") == t.tiles_drawn);
        CHECK(count(t.svg, " Z\"/>") == t.tiles_drawn);
        CHECK(count(t.svg, "fill=\"#f4c542\"") == 1);
    }
}

TEST_CASE("sides are arcs of circles centered on the boundary") {
    const HyperbolicPolygon p = regular_polygon(2);
    TilingOptions o;
    o.depth = 2;
    const Tiling t = tile_svg(p, generators(p), o);
    const double baseline = o.y_max * o.width_px / (o.x_max - o.x_min);

    int arcs = 0;
    std::istringstream lines(t.svg);
    for (std::string line; std::getline(lines, line);) {
        const auto d = line.find(" d=\"");
        if (d == std::string::npos) continue;
        std::istringstream cmds(line.substr(d + 4));
        std::string op;
        double x = 0, y = 0;
        while (cmds >> op) {
            if (op == "M" || op == "L") {
                cmds >> x >> y;
            } else if (op == "A") {
                double rx = 0, ry = 0, rot = 0, x2 = 0, y2 = 0;
                int large = 0, sweep = 0;
                cmds >> rx >> ry >> rot >> large >> sweep >> x2 >> y2;
                CHECK(rx == ry);
                CHECK(large == 0);
                // the center is on the baseline, equidistant from both ends
                const double hx = y - baseline, hy = y2 - baseline;
                const double cx = (x2 * x2 + hy * hy - x * x - hx * hx) / (2.0 * (x2 - x));
                CHECK(std::hypot(x - cx, hx) == doctest::Approx(rx).epsilon(1e-3).scale(1.0));
                // arc bulges upward: drawn clockwise when moving right
                CHECK(sweep == (x2 > x ? 1 : 0));
                x = x2;
                y = y2;
                ++arcs;
            }
        }
    }
    CHECK(arcs > 8 * 10);
}

TEST_CASE("viewport options scale the picture") {
    const HyperbolicPolygon p = regular_polygon(2);
    TilingOptions o;
    o.depth = 0;
    o.width_px = 400.0;
    const Tiling t = tile_svg(p, generators(p), o);
    CHECK(t.svg.find("width=\"400.000\" height=\"200.000\"") != std::string::npos);
}
