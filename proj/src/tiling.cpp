#include "hypsurf/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

namespace hypsurf {

namespace {

using Key = std::tuple<long long, long long, long long, long long>;

// Entries rounded after fixing the overall sign, so A and -A collide.
Key psl_key(const Mat2& m) {
    auto e = m.entries();
    const double lead = std::abs(e[0]) > 1e-9 ? e[0] : (std::abs(e[1]) > 1e-9 ? e[1] : e[2]);
    if (lead < 0.0) {
        for (double& v : e) v = -v;
    }
    auto q = [](double v) { return std::llround(v * 1e7); };
    return {q(e[0]), q(e[1]), q(e[2]), q(e[3])};
}

}  // namespace

std::vector<Mat2> group_elements(std::span<const Mat2> generators, int depth) {
    std::vector<Mat2> letters;
    for (const Mat2& g : generators) {
        letters.push_back(g);
        letters.push_back(g.inverse());
    }
    std::vector<Mat2> out{Mat2::identity()};
    std::set<Key> seen{psl_key(out.front())};
    std::vector<Mat2> frontier = out;
    for (int level = 0; level < depth; ++level) {
        std::vector<Mat2> next;
        for (const Mat2& w : frontier) {
            for (const Mat2& l : letters) {
                const Mat2 m = w * l;
                // Entries this large belong to tiles far below the pixel grid.
                if (std::abs(m.a()) + std::abs(m.b()) + std::abs(m.c()) + std::abs(m.d()) > 1e6) continue;
                if (seen.insert(psl_key(m)).second) next.push_back(m);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

Tiling tile_svg(const HyperbolicPolygon& p, std::span<const Mat2> generators, const TilingOptions& options) {
    const double scale = options.width_px / (options.x_max - options.x_min);
    const double height_px = options.y_max * scale;
    auto sx = [&](double x) { return (x - options.x_min) * scale; };
    auto sy = [&](double y) { return (options.y_max - y) * scale; };

    const auto elements = group_elements(generators, options.depth);

    std::ostringstream svg;
    svg << std::fixed << std::setprecision(3);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width_px
        << "\" height=\"" << height_px << "\" viewBox=\"0 0 " << options.width_px << ' ' << height_px << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<line x1=\"0\" y1=\"" << height_px << "\" x2=\"" << options.width_px << "\" y2=\"" << height_px
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    int drawn = 0;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        std::vector<HPoint> verts;
        double lo_x = 1e300, hi_x = -1e300, hi_y = 0.0;
        for (const HPoint& v : p.vertices()) {
            verts.push_back(mobius_act(elements[k], v));
            lo_x = std::min(lo_x, verts.back().x());
            hi_x = std::max(hi_x, verts.back().x());
            hi_y = std::max(hi_y, verts.back().y());
        }
        const bool outside = hi_x < options.x_min || lo_x > options.x_max || verts.front().y() > 4.0 * options.y_max;
        const bool tiny = (hi_x - lo_x) * scale < 0.5 && hi_y * scale < 0.5;
        if (outside || tiny) continue;

        svg << "<path fill=\"" << (k == 0 ? "#f4c542" : "none") << "\" stroke=\"#1f3b73\" stroke-width=\""
            << (k == 0 ? 1.5 : 0.6) << "\" d=\"M " << sx(verts[0].x()) << ' ' << sy(verts[0].y());
        for (std::size_t s = 0; s < verts.size(); ++s) {
            const HPoint& from = verts[s];
            const HPoint& to = verts[(s + 1) % verts.size()];
            const double dx = to.x() - from.x();
            if (std::abs(dx) <= 1e-12 * std::max(1.0, std::abs(from.x()))) {
                svg << " L " << sx(to.x()) << ' ' << sy(to.y());
                continue;
            }
            // Geodesic: circle centered on the real axis through both points.
            const double center = (std::norm(to.z()) - std::norm(from.z())) / (2.0 * dx);
            const double radius = std::abs(from.z() - Complex{center, 0.0}) * scale;
            // Over the top from left to right is clockwise on screen.
            const int sweep = dx > 0.0 ? 1 : 0;
            svg << " A " << radius << ' ' << radius << " 0 0 " << sweep << ' ' << sx(to.x()) << ' ' << sy(to.y());
        }
        svg << " Z\"/>\n";
        ++drawn;
    }
    svg << "</svg>\n";
    return {svg.str(), drawn, static_cast<int>(elements.size())};
}

}  // namespace hypsurf
