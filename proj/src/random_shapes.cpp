#include "symdiff/random_shapes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Angle jitter fraction. Gaps between consecutive vertex angles then lie in
// [0.55, 1.45] * 2*pi/n, strictly below pi even for triangles.
constexpr double kJitter = 0.45;

std::vector<Point2> star_ring(Rng& rng, Point2 center, int n, double rmin, double rmax) {
    std::vector<Point2> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double angle =
            2.0 * kPi * (static_cast<double>(i) + kJitter * (2.0 * rng.uniform() - 1.0) * 0.5) /
            static_cast<double>(n);
        double radius = rng.uniform(rmin, rmax);
        vertices.push_back(
            {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
    }
    return vertices;
}

double ring_inradius(const std::vector<Point2>& vertices, Point2 center) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        best = std::min(best, dist_point_segment(center, vertices[i],
                                                 vertices[(i + 1) % vertices.size()]));
    }
    return best;
}

}  // namespace

PolygonShape random_star(Rng& rng, const StarParams& params) {
    int n = rng.uniform_int(params.min_vertices, params.max_vertices);
    Point2 center{rng.uniform(-params.center_range, params.center_range),
                  rng.uniform(-params.center_range, params.center_range)};

    PolygonShape shape;
    Ring outer;
    outer.orientation = RingOrientation::ccw;
    outer.vertices = star_ring(rng, center, n, params.radius_min, params.radius_max);
    shape.rings.push_back(std::move(outer));

    if (rng.uniform() < params.hole_chance) {
        double hole_radius = 0.3 * ring_inradius(shape.rings[0].vertices, center);
        if (hole_radius > 100.0 * kSnapEps) {
            int m = rng.uniform_int(3, 8);
            Ring hole;
            hole.orientation = RingOrientation::cw;
            for (int i = 0; i < m; ++i) {
                // clockwise: angles decreasing
                double angle = -2.0 * kPi * static_cast<double>(i) / static_cast<double>(m);
                hole.vertices.push_back({center.x + hole_radius * std::cos(angle),
                                         center.y + hole_radius * std::sin(angle)});
            }
            shape.rings.push_back(std::move(hole));
        }
    }
    validate_shape(shape);
    return shape;
}

PolygonShape random_compact_star(Rng& rng) {
    StarParams params;
    params.min_vertices = 5;
    params.max_vertices = 16;
    params.center_range = 1.0;
    params.radius_min = 1.0;
    params.radius_max = 2.0;
    params.hole_chance = 0.2;
    return random_star(rng, params);
}

ConvexPolygon random_derivative_test_polygon(Rng& rng) {
    double base = rng.uniform(1.5, 2.0);
    Point2 center{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    std::vector<Point2> points;
    points.reserve(12);
    for (int k = 0; k < 12; ++k) {
        double angle = 2.0 * kPi * static_cast<double>(k) / 12.0;
        double radius = base * (1.0 + rng.uniform(-0.005, 0.005));
        points.push_back(
            {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
    }
    return convex_hull(points);
}

RigidMotion2 random_motion(Rng& rng, double translation_max) {
    double theta = rng.uniform(0.0, 2.0 * kPi);
    return {normalize_angle(theta), random_translation(rng, translation_max)};
}

Point2 random_translation(Rng& rng, double translation_max) {
    double radius = translation_max * std::sqrt(rng.uniform());
    double phi = rng.uniform(0.0, 2.0 * kPi);
    return {radius * std::cos(phi), radius * std::sin(phi)};
}

}  // namespace symdiff
