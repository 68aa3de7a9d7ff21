#include "hypsurf/polygon.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hypsurf {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kIUnit{0.0, 1.0};

// Disk model centered at `center`: z -> (z - c) / (z - conj(c)).
Complex to_disk(const HPoint& z, const HPoint& center) {
    return (z.z() - center.z()) / (z.z() - std::conj(center.z()));
}

// Unit disk -> upper half-plane, 0 -> i.
HPoint from_disk(Complex w) { return HPoint(kIUnit * (1.0 + w) / (1.0 - w)); }

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

double regular_angle(int sides, double radius) {
    // Interior angle at vertex 0 of the n-gon with vertices radius * e^{2 pi i k / n}.
    const Complex v0 = radius;
    const Complex prev = std::polar(radius, -2.0 * kPi / sides);
    const Complex next = std::polar(radius, 2.0 * kPi / sides);
    // Recenter at v0 inside the disk: w -> (w - v0) / (1 - conj(v0) w).
    const Complex p = (prev - v0) / (1.0 - std::conj(v0) * prev);
    const Complex q = (next - v0) / (1.0 - std::conj(v0) * next);
    return wrap_angle(std::arg(p / q));
}

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n) {
    GaussLegendre gl{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        gl.nodes[i] = x;
        gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

// Normalizes the segment [p, q]: p -> i and q onto the imaginary axis above i.
Mat2 segment_frame(const HPoint& p, const HPoint& q) {
    const Mat2 to_i = moving_i_to(p).inverse();
    const HPoint q1 = mobius_act(to_i, q);
    // Rotation by theta about i turns the disk picture by -2 theta.
    const Complex w = (q1.z() - kIUnit) / (q1.z() + kIUnit);
    return rotation(std::arg(w) / 2.0) * to_i;
}

}  // namespace

HyperbolicPolygon::HyperbolicPolygon(std::vector<HPoint> vertices, int genus)
    : vertices_(std::move(vertices)), genus_(genus) {
    if (genus < 2) throw std::invalid_argument("polygon genus must be at least 2");
    if (vertices_.size() != static_cast<std::size_t>(4 * genus)) {
        throw std::invalid_argument("a genus-g polygon has 4g vertices");
    }
    const auto angles = interior_angles(vertices_);
    double sum = 0.0;
    for (double a : angles) {
        if (std::abs(a - angles.front()) > kPolygonAngleTolerance) {
            throw std::invalid_argument("polygon interior angles are not all equal");
        }
        sum += a;
    }
    if (std::abs(sum - 2.0 * kPi) > kPolygonAngleTolerance) {
        throw std::invalid_argument("polygon interior angles do not sum to 2 pi");
    }
}

const HPoint& HyperbolicPolygon::vertex(int k) const {
    const int n = static_cast<int>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::vector<double> interior_angles(std::span<const HPoint> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("a polygon needs at least three vertices");
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const HPoint& v = vertices[k];
        const Complex prev = to_disk(vertices[(k + n - 1) % n], v);
        const Complex next = to_disk(vertices[(k + 1) % n], v);
        out[k] = wrap_angle(std::arg(prev / next));
    }
    return out;
}

double regular_polygon_disk_radius(int sides, double interior_angle) {
    if (sides < 3) throw std::invalid_argument("a polygon needs at least three sides");
    if (!(interior_angle > 0.0 && interior_angle < kPi * (sides - 2) / sides)) {
        throw std::invalid_argument("no regular hyperbolic polygon has that interior angle");
    }
    double lo = 0.0;
    double hi = 1.0;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (regular_angle(sides, mid) > interior_angle ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

HyperbolicPolygon regular_polygon(int genus) {
    if (genus < 2) {
        throw GenusTooSmall("a regular 4g-gon with angle sum 2 pi exists only for g >= 2");
    }
    const int n = 4 * genus;
    const double radius = regular_polygon_disk_radius(n, 2.0 * kPi / n);
    std::vector<HPoint> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) vertices.push_back(from_disk(std::polar(radius, 2.0 * kPi * k / n)));
    return {std::move(vertices), genus};
}

double polygon_area(std::span<const HPoint> vertices) {
    double sum = 0.0;
    for (double a : interior_angles(vertices)) sum += a;
    return (static_cast<double>(vertices.size()) - 2.0) * kPi - sum;
}

double polygon_area(const HyperbolicPolygon& p) { return polygon_area(p.vertices()); }

double polygon_area_quadrature(std::span<const HPoint> vertices, const HPoint& center, int nodes_per_side) {
    const std::size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("a polygon needs at least three vertices");
    const GaussLegendre gl = gauss_legendre(nodes_per_side);

    // In the disk model around `center` rays from 0 are geodesics, so each
    // meets the boundary once. Area density there is 4 / (1 - |w|^2)^2.
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex w0 = to_disk(vertices[k], center);
        const Complex w1 = to_disk(vertices[(k + 1) % n], center);
        const double phi0 = std::arg(w0);
        const double sweep = wrap_angle(std::arg(w1) - phi0);

        // Geodesic through w0, w1: circle with center C, 2 Re(C conj(w)) = 1 + |w|^2.
        const double m00 = w0.real(), m01 = w0.imag(), r0 = 0.5 * (1.0 + std::norm(w0));
        const double m10 = w1.real(), m11 = w1.imag(), r1 = 0.5 * (1.0 + std::norm(w1));
        const double det = m00 * m11 - m01 * m10;

        auto boundary = [&](double phi) {
            const Complex u = std::polar(1.0, phi);
            if (std::abs(det) < 1e-14) {
                // Side lies on a diameter; the ray meets it only at the origin's
                // far side, which cannot happen for an interior center.
                throw std::invalid_argument("center lies on the line of a side");
            }
            const Complex c{(r0 * m11 - m01 * r1) / det, (m00 * r1 - r0 * m10) / det};
            const double proj = (c * std::conj(u)).real();
            return proj - std::sqrt(proj * proj - 1.0);
        };

        for (int a = 0; a < nodes_per_side; ++a) {
            const double phi = phi0 + 0.5 * sweep * (gl.nodes[a] + 1.0);
            const double rho = boundary(phi);
            double radial = 0.0;
            for (int b = 0; b < nodes_per_side; ++b) {
                const double t = 0.5 * rho * (gl.nodes[b] + 1.0);
                const double s = 1.0 - t * t;
                radial += gl.weights[b] * 4.0 * t / (s * s);
            }
            total += gl.weights[a] * 0.5 * sweep * 0.5 * rho * radial;
        }
    }
    return total;
}

Mat2 segment_isometry(const HPoint& p, const HPoint& q, const HPoint& p2, const HPoint& q2) {
    return segment_frame(p2, q2).inverse() * segment_frame(p, q);
}

std::vector<SidePairing> side_pairing_maps(const HyperbolicPolygon& poly) {
    const int n = 4 * poly.genus();
    auto idx = [n](int k) { return ((k % n) + n) % n; };
    auto make = [&](std::string label, int src, int dst, int s0, int t0, int s1, int t1) {
        SidePairing sp{std::move(label),
                       segment_isometry(poly.vertex(s0), poly.vertex(s1), poly.vertex(t0), poly.vertex(t1)),
                       idx(src),
                       idx(dst),
                       {{{idx(s0), idx(t0)}, {idx(s1), idx(t1)}}}};
        for (const auto& [from, to] : sp.vertex_map) {
            const HPoint image = mobius_act(sp.map, poly.vertex(from));
            const double miss = hyp_distance(image, poly.vertex(to));
            if (!(miss <= kPairingTolerance)) {
                std::ostringstream msg;
                msg << "side pairing " << sp.label << " misses vertex " << to << " by " << miss;
                throw PairingFailed(msg.str());
            }
        }
        return sp;
    };

    std::vector<SidePairing> out;
    for (int j = 0; j < poly.genus(); ++j) {
        const int base = 4 * j;
        const std::string idx_str = std::to_string(j + 1);
        out.push_back(make("a" + idx_str, base + 2, base, base + 3, base, base + 2, base + 1));
        out.push_back(make("b" + idx_str, base + 1, base + 3, base + 1, base + 4, base + 2, base + 3));
    }
    return out;
}

Representation side_pairings(const HyperbolicPolygon& p) {
    const auto maps = side_pairing_maps(p);
    std::vector<Mat2> a;
    std::vector<Mat2> b;
    for (std::size_t k = 0; k < maps.size(); k += 2) {
        a.push_back(maps[k].map);
        b.push_back(maps[k + 1].map);
    }
    return Representation(std::move(a), std::move(b)).validate();
}

std::vector<HPoint> vertex_cycle(const HyperbolicPolygon& p, std::span<const SidePairing> pairings) {
    const int n = 4 * p.genus();
    auto other_side = [n](int vertex, int side) {
        // Sides at vertex k are k - 1 and k.
        const int before = (vertex + n - 1) % n;
        return side == vertex ? before : vertex;
    };

    int vertex = 0;
    int side = 0;
    HPoint point = p.vertex(0);
    std::vector<HPoint> points{point};
    for (int step = 0; step < 2 * n; ++step) {
        const SidePairing* hit = nullptr;
        bool forward = true;
        for (const SidePairing& sp : pairings) {
            if (sp.source_side == side) {
                hit = &sp;
                forward = true;
                break;
            }
            if (sp.target_side == side) {
                hit = &sp;
                forward = false;
                break;
            }
        }
        if (hit == nullptr) throw PairingFailed("side " + std::to_string(side) + " has no pairing");

        int image = -1;
        for (const auto& [from, to] : hit->vertex_map) {
            if (forward && from == vertex) image = to;
            if (!forward && to == vertex) image = from;
        }
        if (image < 0) throw PairingFailed("vertex is not an endpoint of its side");

        point = mobius_act(forward ? hit->map : hit->map.inverse(), point);
        points.push_back(point);
        const int landed_side = forward ? hit->target_side : hit->source_side;
        vertex = image;
        side = other_side(vertex, landed_side);
        if (vertex == 0 && side == 0) break;
    }
    return points;
}

}  // namespace hypsurf
