#pragma once

#include "symdiff/geometry.hpp"

#include <vector>

namespace symdiff {

// Raised when the overlay detects an internal inconsistency (crossed cells,
// odd boundary parity). Callers get an error, never a silently wrong area.
class clipping_error : public std::runtime_error {
public:
    explicit clipping_error(const std::string& what) : std::runtime_error(what) {}
};

// Region pieces from an overlay. `area` is the exact sum of the signed ring
// areas of `pieces`; slab cells thinner than kSnapEps are dropped from the
// piece list, so it can undershoot the measure-exact operators by a snap-scale
// amount on degenerate overlays.
struct ClipResult {
    PolygonShape pieces;
    double area = 0.0;
};

double intersection_area(const PolygonShape& a, const PolygonShape& b);
double symdiff_area(const PolygonShape& a, const PolygonShape& b);

// Volume of overlap F(r) = area(rA cap B).
double overlap_value(const PolygonShape& a, const RigidMotion2& r, const PolygonShape& b);

ClipResult clip_intersection(const PolygonShape& a, const PolygonShape& b);
ClipResult clip_symdiff(const PolygonShape& a, const PolygonShape& b);

namespace detail {

// One non-vertical overlay segment, stored left to right.
struct SweepSegment {
    double x0, y0, x1, y1;
    bool from_b;
};

struct SweepTotals {
    double inter = 0.0;
    double only_a = 0.0;
    double only_b = 0.0;
};

// Decomposes the plane into vertical slabs bounded by endpoint and crossing
// abscissas, classifies each trapezoid cell by even-odd parity per operand,
// and accumulates areas. Exposed for direct robustness testing.
SweepTotals sweep_totals(const std::vector<SweepSegment>& segments);

std::vector<SweepSegment> shape_segments(const PolygonShape& shape, bool from_b);

// Returns b with every vertex lying within kSnapEps of a vertex of a replaced
// by that vertex (nearest wins, lexicographic on ties).
PolygonShape snap_to_operand(const PolygonShape& a, const PolygonShape& b);

}  // namespace detail

}  // namespace symdiff
