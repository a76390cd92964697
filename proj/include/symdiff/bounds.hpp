#pragma once

#include "symdiff/geometry.hpp"

#include <string>

namespace symdiff {

// Measured quantity, its certified upper bound, and their gap.
// slack = rhs - lhs stays >= -1e-9 * max(1, rhs) whenever the bound applies.
struct BoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::string bound_kind;
    std::string inputs_digest;
};

// Rotation-bound constant (2d/(d+1))^((d-1)/2) for dimension d.
struct DimensionalConstant {
    int d = 0;
    double value = 0.0;
};

DimensionalConstant rotation_constant(int d);

enum class RotationVariant { general, rectifiable };

// area(K) + |t| * projection_extent(K, t): the swept volume of K along t.
double cavalieri_sweep_area(const ConvexPolygon& k, Point2 t);

// sup over the boundary of |a - Ma| for the rotation M by theta about center:
// 2 |sin(theta/2)| * max_radius.
double displacement_sup(const PolygonShape& shape, double theta, Point2 center);

// symdiff(A, A + t) <= |t| * perimeter(A)
BoundReport translation_symdiff_bound(const PolygonShape& shape, Point2 t);

// symdiff(A, MA) <= c * w * perimeter(A), with c the dimensional constant for
// the general variant and 1 for polygonal boundaries.
BoundReport rotation_symdiff_bound(const PolygonShape& shape, double theta, Point2 center,
                                   RotationVariant variant);

// symdiff(A, rA) <= (|t| + w) * perimeter(A), rotation taken about the origin.
BoundReport rigid_motion_symdiff_bound(const PolygonShape& shape, const RigidMotion2& r);

// Certified Lipschitz bound on |F(r) - F(s)| for the volume of overlap of
// moved copies of a with any fixed second shape.
double overlap_lipschitz_bound(const PolygonShape& a, const RigidMotion2& r,
                               const RigidMotion2& s);

// Equality-style report: lhs is the exact area of the swept hull, rhs the
// Cavalieri formula.
BoundReport cavalieri_report(const ConvexPolygon& k, Point2 t);

// Serializes with keys exactly lhs, rhs, slack, bound_kind, inputs_digest.
std::string bound_report_json(const BoundReport& report);

}  // namespace symdiff
