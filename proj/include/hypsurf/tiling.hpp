#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypsurf/polygon.hpp"

namespace hypsurf {

struct TilingOptions {
    int depth = 2;
    double width_px = 800.0;
    // Half-plane viewport [-4, 4] x (0, 4].
    double x_min = -4.0;
    double x_max = 4.0;
    double y_max = 4.0;
};

// Distinct group elements (up to sign) given by words of length <= depth in
// the generators and their inverses, identity first.
std::vector<Mat2> group_elements(std::span<const Mat2> generators, int depth);

struct Tiling {
    std::string svg;
    int tiles_drawn;
    int elements;
};

// SVG 1.1 picture of the images of the polygon under group_elements, sides
// drawn as circular arcs (or vertical segments) in the half-plane viewport.
Tiling tile_svg(const HyperbolicPolygon& p, std::span<const Mat2> generators, const TilingOptions& options = {});

}  // namespace hypsurf
