#pragma once

#include "symdiff/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symdiff {

// One box of the motion search space. For translation searches the theta axis
// is degenerate (lo == hi == 0). upper_bound dominates the objective over the
// whole box; that is the certificate branch-and-bound relies on.
struct MotionCell {
    double theta_lo = 0.0;
    double theta_hi = 0.0;
    double tx_lo = 0.0;
    double tx_hi = 0.0;
    double ty_lo = 0.0;
    double ty_hi = 0.0;
    double center_value = 0.0;
    double upper_bound = 0.0;
};

enum class MatchStatus { converged, budget_exhausted };

const char* to_string(MatchStatus status);

struct MatchResult {
    RigidMotion2 best_motion;
    double best_value = 0.0;
    double certified_upper = 0.0;
    double gap = 0.0;
    std::int64_t cells_expanded = 0;
    MatchStatus status = MatchStatus::converged;
};

struct MatchOptions {
    double gap_target = 0.0;       // <= 0 selects 1e-2 * min(area a, area b)
    std::int64_t budget = 1000000;
    int workers = 1;
    // Overrides the derived translation search box. For rigid searches the
    // box constrains where the centroid of the moving shape may land.
    std::optional<Box2> search_box;
    // When set, every expanded cell is appended (audit hook for the
    // soundness and certificate suites).
    std::vector<MotionCell>* trace = nullptr;
};

// Default search domains. The translation box contains every t for which
// a + t can intersect b; the rigid box contains every admissible centroid
// placement. Probing these boxes exhaustively can never beat the certificate
// of a search run with the same defaults.
Box2 translation_search_box(const PolygonShape& a, const PolygonShape& b);
Box2 rigid_search_box(const PolygonShape& a, const PolygonShape& b);

MatchResult match_translations(const PolygonShape& a, const PolygonShape& b,
                               const MatchOptions& options);
MatchResult match_translations(const PolygonShape& a, const PolygonShape& b, double gap_target,
                               std::int64_t budget);

MatchResult match_rigid(const PolygonShape& a, const PolygonShape& b,
                        const MatchOptions& options);
MatchResult match_rigid(const PolygonShape& a, const PolygonShape& b, double gap_target,
                        std::int64_t budget);

// Objective in the rigid search parameterization: a is re-centered at its
// centroid, rotated by r.theta, and the centroid is placed at r.t. Rigid
// trace cells bound this function; match results are translated back to the
// origin-pivot parameterization via compose.
double centered_overlap(const PolygonShape& a, const PolygonShape& b, const RigidMotion2& r);

struct LandscapeRow {
    double theta = 0.0;
    double tx = 0.0;
    double ty = 0.0;
    double value = 0.0;
};

// Exhaustive grid: theta_samples angles spaced 2*pi/m from 0, and t_samples
// per translation axis spanning the box of translations that make the
// bounding boxes meet (endpoints included; a single sample sits at the
// midpoint).
std::vector<LandscapeRow> landscape(const PolygonShape& a, const PolygonShape& b,
                                    int theta_samples, int t_samples);

std::string match_result_json(const MatchResult& result);

}  // namespace symdiff
