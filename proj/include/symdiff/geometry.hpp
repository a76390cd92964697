#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symdiff {

// Vertices closer than this are treated as coincident. Intersection points
// this close to a segment endpoint are snapped onto the endpoint.
inline constexpr double kSnapEps = 1e-9;

class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

enum class RingOrientation { ccw, cw };

// Closed vertex loop; the last vertex connects back to the first.
struct Ring {
    std::vector<Point2> vertices;
    RingOrientation orientation = RingOrientation::ccw;
};

// Union of the regions bounded by the ccw rings, minus the cw holes.
// Multiple disjoint outer rings are allowed.
struct PolygonShape {
    std::vector<Ring> rings;
};

// Rotation by theta about the origin followed by translation by t.
struct RigidMotion2 {
    double theta = 0.0;
    Point2 t{0.0, 0.0};
};

struct ConvexPolygon {
    std::vector<Point2> vertices;  // ccw, every vertex extreme
};

struct Box2 {
    Point2 min{0.0, 0.0};
    Point2 max{0.0, 0.0};
};

double signed_ring_area(const std::vector<Point2>& vertices);
double ring_perimeter(const std::vector<Point2>& vertices);

double area(const PolygonShape& shape);
double area(const ConvexPolygon& poly);
double perimeter(const PolygonShape& shape);
Point2 centroid(const PolygonShape& shape);
Box2 bounding_box(const PolygonShape& shape);

// Throws validation_error when any ring or the nesting structure is invalid.
// Checks: three or more vertices per ring, consecutive vertices farther apart
// than kSnapEps, finite coordinates, no self intersection (O(n^2) pair scan),
// orientation matching the signed area, holes strictly inside exactly one
// outer ring, outer rings with pairwise disjoint interiors, positive area.
void validate_shape(const PolygonShape& shape);

Point2 apply(const RigidMotion2& m, Point2 p);
PolygonShape apply_motion(const PolygonShape& shape, const RigidMotion2& m);
PolygonShape translate(const PolygonShape& shape, Point2 t);

// apply(compose(r, s), x) == apply(r, apply(s, x))
RigidMotion2 compose(const RigidMotion2& r, const RigidMotion2& s);
RigidMotion2 invert(const RigidMotion2& m);
double normalize_angle(double theta);  // into [0, 2*pi)

// Motion rotating by theta about an arbitrary pivot.
RigidMotion2 rotation_about(double theta, Point2 pivot);

// Length of the projection of the polygon onto the line orthogonal to
// direction: max minus min of vertex dot products with the unit normal.
// Throws validation_error for a zero direction.
double projection_extent(const ConvexPolygon& poly, Point2 direction);

ConvexPolygon convex_hull(const std::vector<Point2>& points);
ConvexPolygon convex_hull(const PolygonShape& shape);
PolygonShape to_shape(const ConvexPolygon& poly);

double max_radius(const PolygonShape& shape, Point2 center);

// Even-odd membership test. Points within boundary_eps of an edge count as
// inside.
bool point_in_shape(const PolygonShape& shape, Point2 p, double boundary_eps = kSnapEps);
double distance_to_boundary(const PolygonShape& shape, Point2 p);
double dist_point_segment(Point2 p, Point2 a, Point2 b);

// Points spaced uniformly by arclength along every ring, hole rings included.
std::vector<Point2> sample_boundary(const PolygonShape& shape, std::size_t count);

}  // namespace symdiff
