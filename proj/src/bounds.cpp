#include "symdiff/bounds.hpp"

#include "symdiff/boolean_ops.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

namespace symdiff {

namespace {

class Digest {
public:
    void add(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(bits >> (8 * i)));
    }

    void add(const std::string& s) {
        for (char c : s) mix(static_cast<unsigned char>(c));
        mix(0);
    }

    void add(const PolygonShape& shape) {
        add(static_cast<double>(shape.rings.size()));
        for (const auto& ring : shape.rings) {
            add(static_cast<double>(ring.vertices.size()));
            for (Point2 v : ring.vertices) {
                add(v.x);
                add(v.y);
            }
        }
    }

    std::string hex() const {
        std::ostringstream out;
        out << std::hex;
        for (int i = 60; i >= 0; i -= 4) out << ((h_ >> i) & 0xf);
        return out.str();
    }

private:
    std::uint64_t h_ = 14695981039346656037ull;

    void mix(unsigned char byte) {
        h_ ^= byte;
        h_ *= 1099511628211ull;
    }
};

BoundReport make_report(double lhs, double rhs, std::string kind, Digest& digest) {
    return {lhs, rhs, rhs - lhs, std::move(kind), digest.hex()};
}

}  // namespace

DimensionalConstant rotation_constant(int d) {
    if (d < 1) throw validation_error("dimension must be at least 1");
    double dd = d;
    return {d, std::pow(2.0 * dd / (dd + 1.0), (dd - 1.0) / 2.0)};
}

double cavalieri_sweep_area(const ConvexPolygon& k, Point2 t) {
    if (norm(t) == 0.0) return area(k);
    return area(k) + norm(t) * projection_extent(k, t);
}

double displacement_sup(const PolygonShape& shape, double theta, Point2 center) {
    return 2.0 * std::abs(std::sin(theta / 2.0)) * max_radius(shape, center);
}

BoundReport translation_symdiff_bound(const PolygonShape& shape, Point2 t) {
    validate_shape(shape);
    double lhs = symdiff_area(shape, translate(shape, t));
    double rhs = norm(t) * perimeter(shape);
    Digest d;
    d.add("translation");
    d.add(shape);
    d.add(t.x);
    d.add(t.y);
    return make_report(lhs, rhs, "translation", d);
}

BoundReport rotation_symdiff_bound(const PolygonShape& shape, double theta, Point2 center,
                                   RotationVariant variant) {
    validate_shape(shape);
    PolygonShape moved = apply_motion(shape, rotation_about(theta, center));
    double lhs = symdiff_area(shape, moved);
    double c = variant == RotationVariant::general ? rotation_constant(2).value : 1.0;
    double rhs = c * displacement_sup(shape, theta, center) * perimeter(shape);
    std::string kind =
        variant == RotationVariant::general ? "rotation_general" : "rotation_rectifiable";
    Digest d;
    d.add(kind);
    d.add(shape);
    d.add(theta);
    d.add(center.x);
    d.add(center.y);
    return make_report(lhs, rhs, kind, d);
}

BoundReport rigid_motion_symdiff_bound(const PolygonShape& shape, const RigidMotion2& r) {
    validate_shape(shape);
    double lhs = symdiff_area(shape, apply_motion(shape, r));
    double w = displacement_sup(shape, r.theta, {0.0, 0.0});
    double rhs = (norm(r.t) + w) * perimeter(shape);
    Digest d;
    d.add("rigid");
    d.add(shape);
    d.add(r.theta);
    d.add(r.t.x);
    d.add(r.t.y);
    return make_report(lhs, rhs, "rigid", d);
}

double overlap_lipschitz_bound(const PolygonShape& a, const RigidMotion2& r,
                               const RigidMotion2& s) {
    double w = 2.0 * std::abs(std::sin((r.theta - s.theta) / 2.0)) * max_radius(a, {0.0, 0.0});
    return 0.5 * (norm(r.t - s.t) + w) * perimeter(a);
}

BoundReport cavalieri_report(const ConvexPolygon& k, Point2 t) {
    double rhs = cavalieri_sweep_area(k, t);
    std::vector<Point2> pts = k.vertices;
    for (Point2 v : k.vertices) pts.push_back(v + t);
    double lhs = norm(t) == 0.0 ? area(k) : area(convex_hull(pts));
    Digest d;
    d.add("cavalieri");
    for (Point2 v : k.vertices) {
        d.add(v.x);
        d.add(v.y);
    }
    d.add(t.x);
    d.add(t.y);
    return make_report(lhs, rhs, "cavalieri", d);
}

std::string bound_report_json(const BoundReport& report) {
    nlohmann::ordered_json j;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["slack"] = report.slack;
    j["bound_kind"] = report.bound_kind;
    j["inputs_digest"] = report.inputs_digest;
    return j.dump();
}

}  // namespace symdiff
