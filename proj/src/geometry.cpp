#include "symdiff/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

namespace symdiff {

namespace {

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double orient(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

// Index pairs (ring, edge) for every edge of the shape.
struct EdgeRef {
    std::size_t ring;
    std::size_t index;
    Point2 a;
    Point2 b;
};

std::vector<EdgeRef> collect_edges(const PolygonShape& shape) {
    std::vector<EdgeRef> edges;
    for (std::size_t r = 0; r < shape.rings.size(); ++r) {
        const auto& vs = shape.rings[r].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            edges.push_back({r, i, vs[i], vs[(i + 1) % vs.size()]});
        }
    }
    return edges;
}

double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
    double o1 = orient(a, b, c);
    double o2 = orient(a, b, d);
    double o3 = orient(c, d, a);
    double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        return 0.0;
    }
    return std::min(std::min(dist_point_segment(c, a, b), dist_point_segment(d, a, b)),
                    std::min(dist_point_segment(a, c, d), dist_point_segment(b, c, d)));
}

bool point_strictly_in_ring(const std::vector<Point2>& vs, Point2 p) {
    bool inside = false;
    for (std::size_t i = 0, j = vs.size() - 1; i < vs.size(); j = i++) {
        if ((vs[i].y > p.y) != (vs[j].y > p.y)) {
            double xc = vs[j].x + (vs[i].x - vs[j].x) * (p.y - vs[j].y) / (vs[i].y - vs[j].y);
            if (p.x < xc) inside = !inside;
        }
    }
    return inside;
}

double ring_boundary_distance(const std::vector<Point2>& vs, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = vs.size() - 1; i < vs.size(); j = i++) {
        best = std::min(best, dist_point_segment(p, vs[j], vs[i]));
    }
    return best;
}

}  // namespace

double signed_ring_area(const std::vector<Point2>& vertices) {
    double twice = 0.0;
    for (std::size_t i = 0, j = vertices.size() - 1; i < vertices.size(); j = i++) {
        twice += cross(vertices[j], vertices[i]);
    }
    return 0.5 * twice;
}

double ring_perimeter(const std::vector<Point2>& vertices) {
    double total = 0.0;
    for (std::size_t i = 0, j = vertices.size() - 1; i < vertices.size(); j = i++) {
        total += dist(vertices[j], vertices[i]);
    }
    return total;
}

double area(const PolygonShape& shape) {
    double total = 0.0;
    for (const auto& ring : shape.rings) total += signed_ring_area(ring.vertices);
    return total;
}

double area(const ConvexPolygon& poly) {
    return signed_ring_area(poly.vertices);
}

double perimeter(const PolygonShape& shape) {
    double total = 0.0;
    for (const auto& ring : shape.rings) total += ring_perimeter(ring.vertices);
    return total;
}

Point2 centroid(const PolygonShape& shape) {
    double a6 = 0.0;
    Point2 acc{0.0, 0.0};
    for (const auto& ring : shape.rings) {
        const auto& vs = ring.vertices;
        for (std::size_t i = 0, j = vs.size() - 1; i < vs.size(); j = i++) {
            double w = cross(vs[j], vs[i]);
            acc.x += (vs[j].x + vs[i].x) * w;
            acc.y += (vs[j].y + vs[i].y) * w;
            a6 += w;
        }
    }
    if (a6 == 0.0) throw validation_error("centroid of a zero-area shape");
    return {acc.x / (3.0 * a6), acc.y / (3.0 * a6)};
}

Box2 bounding_box(const PolygonShape& shape) {
    Box2 box;
    box.min = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    box.max = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& ring : shape.rings) {
        for (Point2 v : ring.vertices) {
            box.min.x = std::min(box.min.x, v.x);
            box.min.y = std::min(box.min.y, v.y);
            box.max.x = std::max(box.max.x, v.x);
            box.max.y = std::max(box.max.y, v.y);
        }
    }
    if (!finite(box.min) || !finite(box.max)) throw validation_error("empty or non-finite shape");
    return box;
}

void validate_shape(const PolygonShape& shape) {
    if (shape.rings.empty()) throw validation_error("shape has no rings");

    for (std::size_t r = 0; r < shape.rings.size(); ++r) {
        const auto& ring = shape.rings[r];
        const auto& vs = ring.vertices;
        std::ostringstream tag;
        tag << "ring " << r << ": ";
        if (vs.size() < 3) throw validation_error(tag.str() + "fewer than 3 vertices");
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (!finite(vs[i])) throw validation_error(tag.str() + "non-finite coordinate");
            if (dist(vs[i], vs[(i + 1) % vs.size()]) <= kSnapEps) {
                throw validation_error(tag.str() + "consecutive vertices coincide at index " +
                                       std::to_string(i));
            }
        }
        double sa = signed_ring_area(vs);
        if (sa == 0.0) throw validation_error(tag.str() + "zero signed area");
        bool ccw = sa > 0.0;
        if (ccw != (ring.orientation == RingOrientation::ccw)) {
            throw validation_error(tag.str() + "orientation does not match vertex order");
        }
    }

    // Non-adjacent edge pairs must stay clear of each other. Edges of
    // different rings are never adjacent.
    auto edges = collect_edges(shape);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (e.ring == f.ring) {
                std::size_t n = shape.rings[e.ring].vertices.size();
                std::size_t d = (f.index + n - e.index) % n;
                if (d == 1 || d == n - 1) continue;  // shared endpoint
            }
            if (segment_distance(e.a, e.b, f.a, f.b) <= kSnapEps) {
                std::ostringstream msg;
                msg << "ring " << e.ring << " edge " << e.index << " intersects ring " << f.ring
                    << " edge " << f.index;
                throw validation_error(msg.str());
            }
        }
    }

    // Nesting: holes sit strictly inside exactly one outer ring, outer rings
    // stay outside each other.
    std::vector<std::size_t> outers;
    std::vector<std::size_t> holes;
    for (std::size_t r = 0; r < shape.rings.size(); ++r) {
        (shape.rings[r].orientation == RingOrientation::ccw ? outers : holes).push_back(r);
    }
    if (outers.empty()) throw validation_error("shape has no outer ring");

    for (std::size_t h : holes) {
        std::size_t owner = shape.rings.size();
        for (std::size_t o : outers) {
            if (point_strictly_in_ring(shape.rings[o].vertices, shape.rings[h].vertices[0])) {
                if (owner != shape.rings.size()) {
                    throw validation_error("hole ring " + std::to_string(h) +
                                           " lies inside more than one outer ring");
                }
                owner = o;
            }
        }
        if (owner == shape.rings.size()) {
            throw validation_error("hole ring " + std::to_string(h) + " lies outside every outer ring");
        }
    }
    for (std::size_t a : outers) {
        for (std::size_t b : outers) {
            if (a == b) continue;
            if (point_strictly_in_ring(shape.rings[a].vertices, shape.rings[b].vertices[0])) {
                throw validation_error("outer rings " + std::to_string(a) + " and " +
                                       std::to_string(b) + " are nested");
            }
        }
    }
    for (std::size_t a : holes) {
        for (std::size_t b : holes) {
            if (a == b) continue;
            if (point_strictly_in_ring(shape.rings[a].vertices, shape.rings[b].vertices[0])) {
                throw validation_error("hole rings " + std::to_string(a) + " and " +
                                       std::to_string(b) + " are nested");
            }
        }
    }

    if (area(shape) <= 0.0) throw validation_error("shape area is not positive");
}

Point2 apply(const RigidMotion2& m, Point2 p) {
    double c = std::cos(m.theta);
    double s = std::sin(m.theta);
    return {c * p.x - s * p.y + m.t.x, s * p.x + c * p.y + m.t.y};
}

PolygonShape apply_motion(const PolygonShape& shape, const RigidMotion2& m) {
    double c = std::cos(m.theta);
    double s = std::sin(m.theta);
    PolygonShape out = shape;
    for (auto& ring : out.rings) {
        for (auto& v : ring.vertices) {
            v = {c * v.x - s * v.y + m.t.x, s * v.x + c * v.y + m.t.y};
        }
    }
    return out;
}

PolygonShape translate(const PolygonShape& shape, Point2 t) {
    PolygonShape out = shape;
    for (auto& ring : out.rings) {
        for (auto& v : ring.vertices) v = v + t;
    }
    return out;
}

double normalize_angle(double theta) {
    double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) r += two_pi;
    if (r == two_pi) r = 0.0;
    return r;
}

RigidMotion2 compose(const RigidMotion2& r, const RigidMotion2& s) {
    double c = std::cos(r.theta);
    double sn = std::sin(r.theta);
    Point2 t{c * s.t.x - sn * s.t.y + r.t.x, sn * s.t.x + c * s.t.y + r.t.y};
    return {normalize_angle(r.theta + s.theta), t};
}

RigidMotion2 invert(const RigidMotion2& m) {
    double c = std::cos(m.theta);
    double s = std::sin(m.theta);
    // R(-theta) * (-t)
    return {normalize_angle(-m.theta), {-(c * m.t.x + s * m.t.y), -(c * m.t.y - s * m.t.x)}};
}

RigidMotion2 rotation_about(double theta, Point2 pivot) {
    RigidMotion2 rot{theta, {0.0, 0.0}};
    return compose(RigidMotion2{0.0, pivot}, compose(rot, RigidMotion2{0.0, {-pivot.x, -pivot.y}}));
}

double projection_extent(const ConvexPolygon& poly, Point2 direction) {
    double len = norm(direction);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw validation_error("projection direction must be nonzero and finite");
    }
    Point2 n{-direction.y / len, direction.x / len};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Point2 v : poly.vertices) {
        double d = dot(v, n);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (poly.vertices.empty()) throw validation_error("projection of an empty polygon");
    return hi - lo;
}

ConvexPolygon convex_hull(const std::vector<Point2>& points) {
    std::vector<Point2> pts = points;
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) throw validation_error("convex hull needs 3 or more distinct points");

    auto build = [&](bool lower) {
        std::vector<Point2> chain;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            Point2 p = lower ? pts[k] : pts[pts.size() - 1 - k];
            while (chain.size() >= 2 && orient(chain[chain.size() - 2], chain.back(), p) <= 0.0) {
                chain.pop_back();
            }
            chain.push_back(p);
        }
        return chain;
    };
    auto lo = build(true);
    auto hi = build(false);
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    if (lo.size() < 3) throw validation_error("points are collinear, hull is degenerate");
    return {lo};
}

ConvexPolygon convex_hull(const PolygonShape& shape) {
    std::vector<Point2> pts;
    for (const auto& ring : shape.rings) {
        pts.insert(pts.end(), ring.vertices.begin(), ring.vertices.end());
    }
    return convex_hull(pts);
}

PolygonShape to_shape(const ConvexPolygon& poly) {
    PolygonShape s;
    s.rings.push_back({poly.vertices, RingOrientation::ccw});
    return s;
}

double max_radius(const PolygonShape& shape, Point2 center) {
    double best = 0.0;
    for (const auto& ring : shape.rings) {
        for (Point2 v : ring.vertices) best = std::max(best, dist(v, center));
    }
    return best;
}

double dist_point_segment(Point2 p, Point2 a, Point2 b) {
    Point2 ab = b - a;
    double den = dot(ab, ab);
    if (den == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / den, 0.0, 1.0);
    return dist(p, a + t * ab);
}

bool point_in_shape(const PolygonShape& shape, Point2 p, double boundary_eps) {
    bool inside = false;
    for (const auto& ring : shape.rings) {
        if (point_strictly_in_ring(ring.vertices, p)) inside = !inside;
    }
    if (inside) return true;
    if (boundary_eps > 0.0 && distance_to_boundary(shape, p) <= boundary_eps) return true;
    return false;
}

double distance_to_boundary(const PolygonShape& shape, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ring : shape.rings) {
        best = std::min(best, ring_boundary_distance(ring.vertices, p));
    }
    return best;
}

std::vector<Point2> sample_boundary(const PolygonShape& shape, std::size_t count) {
    double total = perimeter(shape);
    std::vector<Point2> out;
    if (count == 0 || total <= 0.0) return out;
    out.reserve(count);
    double step = total / static_cast<double>(count);
    double carried = 0.0;  // distance already covered toward the next sample
    for (const auto& ring : shape.rings) {
        const auto& vs = ring.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Point2 a = vs[i];
            Point2 b = vs[(i + 1) % vs.size()];
            double len = dist(a, b);
            double pos = carried;
            while (pos < len && out.size() < count) {
                double t = pos / len;
                out.push_back(a + t * (b - a));
                pos += step;
            }
            carried = pos - len;
        }
    }
    while (out.size() < count) out.push_back(shape.rings[0].vertices[0]);
    return out;
}

}  // namespace symdiff
