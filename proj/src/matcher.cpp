#include "symdiff/matcher.hpp"

#include "symdiff/boolean_ops.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <queue>
#include <set>
#include <thread>

namespace symdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Motion search frame. For rigid searches `a` is the input re-centered at its
// centroid, so a cell's translation box is the range of centroid positions
// and radius bounds how far the boundary strays from them.
struct SearchSpace {
    const PolygonShape* a = nullptr;
    const PolygonShape* b = nullptr;
    bool rigid = false;
    double half_per = 0.0;  // Lipschitz constant for pure translations
    double radius = 0.0;
    double cap = 0.0;
    Box2 abox;
    Box2 bbox_b;
};

double objective(const SearchSpace& sp, double theta, double tx, double ty) {
    if (!sp.rigid) return intersection_area(translate(*sp.a, {tx, ty}), *sp.b);
    RigidMotion2 r{normalize_angle(theta), {tx, ty}};
    return intersection_area(apply_motion(*sp.a, r), *sp.b);
}

// True when no motion in the cell can make the shapes meet; the objective is
// identically zero there and the cell needs no Lipschitz reasoning.
bool no_overlap_possible(const SearchSpace& sp, const MotionCell& c) {
    if (!sp.rigid) {
        return sp.abox.max.x + c.tx_hi < sp.bbox_b.min.x ||
               sp.abox.min.x + c.tx_lo > sp.bbox_b.max.x ||
               sp.abox.max.y + c.ty_hi < sp.bbox_b.min.y ||
               sp.abox.min.y + c.ty_lo > sp.bbox_b.max.y;
    }
    double dx = std::max({0.0, sp.bbox_b.min.x - c.tx_hi, c.tx_lo - sp.bbox_b.max.x});
    double dy = std::max({0.0, sp.bbox_b.min.y - c.ty_hi, c.ty_lo - sp.bbox_b.max.y});
    return std::hypot(dx, dy) > sp.radius;
}

// Largest possible objective change between the cell center and any motion in
// the cell: half perimeter times (translation half-diagonal plus the chord of
// the worst rotation offset).
double bound_term(const SearchSpace& sp, const MotionCell& c) {
    double hx = 0.5 * (c.tx_hi - c.tx_lo);
    double hy = 0.5 * (c.ty_hi - c.ty_lo);
    double w = 0.0;
    if (sp.rigid) {
        double ht = 0.5 * (c.theta_hi - c.theta_lo);
        w = 2.0 * std::sin(std::min(0.5 * ht, 0.5 * kPi)) * sp.radius;
    }
    return sp.half_per * (std::hypot(hx, hy) + w);
}

MotionCell make_cell(const SearchSpace& sp, double th_lo, double th_hi, double tx_lo,
                     double tx_hi, double ty_lo, double ty_hi) {
    MotionCell c;
    c.theta_lo = th_lo;
    c.theta_hi = th_hi;
    c.tx_lo = tx_lo;
    c.tx_hi = tx_hi;
    c.ty_lo = ty_lo;
    c.ty_hi = ty_hi;
    if (no_overlap_possible(sp, c)) return c;  // zero value, zero bound
    c.center_value = objective(sp, 0.5 * (th_lo + th_hi), 0.5 * (tx_lo + tx_hi),
                               0.5 * (ty_lo + ty_hi));
    c.upper_bound = std::min(c.center_value + bound_term(sp, c), sp.cap);
    c.upper_bound = std::max(c.upper_bound, c.center_value);
    return c;
}

std::array<double, 6> cell_key(const MotionCell& c) {
    return {c.theta_lo, c.tx_lo, c.ty_lo, c.theta_hi, c.tx_hi, c.ty_hi};
}

double cell_diameter_sq(const MotionCell& c) {
    double dt = c.theta_hi - c.theta_lo;
    double dx = c.tx_hi - c.tx_lo;
    double dy = c.ty_hi - c.ty_lo;
    return dt * dt + dx * dx + dy * dy;
}

// Pop order: highest upper bound, then smaller diameter, then lexicographic
// corner order. Fully deterministic in single-worker runs.
struct CellWorse {
    bool operator()(const MotionCell& a, const MotionCell& b) const {
        if (a.upper_bound != b.upper_bound) return a.upper_bound < b.upper_bound;
        double da = cell_diameter_sq(a);
        double db = cell_diameter_sq(b);
        if (da != db) return da > db;
        return cell_key(a) > cell_key(b);
    }
};

bool splittable(double lo, double hi) {
    double mid = 0.5 * (lo + hi);
    return lo < mid && mid < hi;
}

// Axis whose removal shrinks the bound the most: the rotation chord against
// each translation half-width. Ties prefer theta, then x. Axes too narrow to
// split strictly are skipped; -1 means the cell is a point at double
// precision and is resolved by its center evaluation.
int split_axis(const SearchSpace& sp, const MotionCell& c) {
    double ct = -1.0;
    if (sp.rigid && splittable(c.theta_lo, c.theta_hi)) {
        double ht = 0.5 * (c.theta_hi - c.theta_lo);
        ct = 2.0 * std::sin(std::min(0.5 * ht, 0.5 * kPi)) * sp.radius;
    }
    double cx = splittable(c.tx_lo, c.tx_hi) ? 0.5 * (c.tx_hi - c.tx_lo) : -1.0;
    double cy = splittable(c.ty_lo, c.ty_hi) ? 0.5 * (c.ty_hi - c.ty_lo) : -1.0;
    if (ct < 0.0 && cx < 0.0 && cy < 0.0) return -1;
    if (ct >= cx && ct >= cy) return 0;
    if (cx >= cy) return 1;
    return 2;
}

std::pair<MotionCell, MotionCell> split_cell(const SearchSpace& sp, const MotionCell& c,
                                             int axis) {
    if (axis == 0) {
        double mid = 0.5 * (c.theta_lo + c.theta_hi);
        return {make_cell(sp, c.theta_lo, mid, c.tx_lo, c.tx_hi, c.ty_lo, c.ty_hi),
                make_cell(sp, mid, c.theta_hi, c.tx_lo, c.tx_hi, c.ty_lo, c.ty_hi)};
    }
    if (axis == 1) {
        double mid = 0.5 * (c.tx_lo + c.tx_hi);
        return {make_cell(sp, c.theta_lo, c.theta_hi, c.tx_lo, mid, c.ty_lo, c.ty_hi),
                make_cell(sp, c.theta_lo, c.theta_hi, mid, c.tx_hi, c.ty_lo, c.ty_hi)};
    }
    double mid = 0.5 * (c.ty_lo + c.ty_hi);
    return {make_cell(sp, c.theta_lo, c.theta_hi, c.tx_lo, c.tx_hi, c.ty_lo, mid),
            make_cell(sp, c.theta_lo, c.theta_hi, c.tx_lo, c.tx_hi, mid, c.ty_hi)};
}

struct RawResult {
    double best = 0.0;
    std::array<double, 3> best_at{0.0, 0.0, 0.0};  // theta, tx, ty in search frame
    double certified = 0.0;
    std::int64_t expanded = 0;
    MatchStatus status = MatchStatus::converged;
};

RawResult search_serial(const SearchSpace& sp, const MotionCell& root, double gap_target,
                        std::int64_t budget, std::vector<MotionCell>* trace) {
    RawResult res;
    res.best = root.center_value;
    res.best_at = {0.5 * (root.theta_lo + root.theta_hi), 0.5 * (root.tx_lo + root.tx_hi),
                   0.5 * (root.ty_lo + root.ty_hi)};

    std::priority_queue<MotionCell, std::vector<MotionCell>, CellWorse> frontier;
    frontier.push(root);

    while (!frontier.empty()) {
        MotionCell top = frontier.top();
        if (top.upper_bound - res.best <= gap_target) {
            res.certified = std::max(res.best, top.upper_bound);
            return res;
        }
        if (res.expanded >= budget) {
            res.certified = std::max(res.best, top.upper_bound);
            res.status = MatchStatus::budget_exhausted;
            return res;
        }
        frontier.pop();
        ++res.expanded;
        if (trace) trace->push_back(top);

        int axis = split_axis(sp, top);
        if (axis < 0) continue;  // unsplittable point cell, settled by its center
        auto [left, right] = split_cell(sp, top, axis);
        for (const MotionCell& child : {left, right}) {
            if (child.center_value > res.best) {
                res.best = child.center_value;
                res.best_at = {0.5 * (child.theta_lo + child.theta_hi),
                               0.5 * (child.tx_lo + child.tx_hi),
                               0.5 * (child.ty_lo + child.ty_hi)};
            }
        }
        // Cells that cannot beat the incumbent are certified by it already.
        if (left.upper_bound > res.best) frontier.push(left);
        if (right.upper_bound > res.best) frontier.push(right);
    }
    res.certified = res.best;
    return res;
}

RawResult search_parallel(const SearchSpace& sp, const MotionCell& root, double gap_target,
                          std::int64_t budget, int workers, std::vector<MotionCell>* trace) {
    RawResult res;
    res.best = root.center_value;
    res.best_at = {0.5 * (root.theta_lo + root.theta_hi), 0.5 * (root.tx_lo + root.tx_hi),
                   0.5 * (root.ty_lo + root.ty_hi)};

    std::mutex mu;
    std::condition_variable cv;
    std::priority_queue<MotionCell, std::vector<MotionCell>, CellWorse> frontier;
    frontier.push(root);
    std::multiset<double> inflight;
    bool done = false;

    auto worker = [&]() {
        std::unique_lock<std::mutex> lk(mu);
        while (true) {
            cv.wait(lk, [&] { return done || !frontier.empty() || inflight.empty(); });
            if (done) return;
            if (frontier.empty()) {
                if (inflight.empty()) {
                    res.certified = res.best;
                    done = true;
                    cv.notify_all();
                    return;
                }
                continue;
            }
            double frontier_ub = frontier.top().upper_bound;
            double global_ub = std::max(res.best, frontier_ub);
            if (!inflight.empty()) global_ub = std::max(global_ub, *inflight.rbegin());
            if (frontier_ub - res.best <= gap_target &&
                global_ub - res.best <= gap_target) {
                res.certified = global_ub;
                done = true;
                cv.notify_all();
                return;
            }
            if (res.expanded >= budget) {
                res.certified = global_ub;
                res.status = MatchStatus::budget_exhausted;
                done = true;
                cv.notify_all();
                return;
            }
            MotionCell top = frontier.top();
            frontier.pop();
            ++res.expanded;
            if (trace) trace->push_back(top);
            int axis = split_axis(sp, top);
            if (axis < 0) continue;  // unsplittable point cell
            auto flight = inflight.insert(top.upper_bound);

            lk.unlock();
            auto [left, right] = split_cell(sp, top, axis);
            lk.lock();

            inflight.erase(flight);
            for (const MotionCell& child : {left, right}) {
                if (child.center_value > res.best) {
                    res.best = child.center_value;
                    res.best_at = {0.5 * (child.theta_lo + child.theta_hi),
                                   0.5 * (child.tx_lo + child.tx_hi),
                                   0.5 * (child.ty_lo + child.ty_hi)};
                }
            }
            if (left.upper_bound > res.best) frontier.push(left);
            if (right.upper_bound > res.best) frontier.push(right);
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    return res;
}

RawResult run_search(const SearchSpace& sp, const MotionCell& root, double gap_target,
                     std::int64_t budget, const MatchOptions& options) {
    RawResult res = options.workers > 1
                        ? search_parallel(sp, root, gap_target, budget, options.workers,
                                          options.trace)
                        : search_serial(sp, root, gap_target, budget, options.trace);
    // A search that settles at the root still examined it; keep the trace an
    // honest record of every cell whose bound the caller may want to audit.
    if (options.trace && options.trace->empty()) options.trace->push_back(root);
    return res;
}

double resolve_gap_target(const MatchOptions& options, double cap) {
    if (options.gap_target > 0.0) return options.gap_target;
    return 0.01 * cap;
}

}  // namespace

const char* to_string(MatchStatus status) {
    return status == MatchStatus::converged ? "converged" : "budget_exhausted";
}

Box2 translation_search_box(const PolygonShape& a, const PolygonShape& b) {
    Box2 abox = bounding_box(a);
    Box2 bbox = bounding_box(b);
    double diag = dist(abox.min, abox.max);
    Box2 box;
    box.min = {bbox.min.x - abox.max.x - diag, bbox.min.y - abox.max.y - diag};
    box.max = {bbox.max.x - abox.min.x + diag, bbox.max.y - abox.min.y + diag};
    return box;
}

Box2 rigid_search_box(const PolygonShape& a, const PolygonShape& b) {
    Point2 c = centroid(a);
    PolygonShape centered = translate(a, {-c.x, -c.y});
    double radius = max_radius(centered, {0.0, 0.0});
    Box2 bbox = bounding_box(b);
    Box2 box;
    box.min = {bbox.min.x - 2.0 * radius, bbox.min.y - 2.0 * radius};
    box.max = {bbox.max.x + 2.0 * radius, bbox.max.y + 2.0 * radius};
    return box;
}

double centered_overlap(const PolygonShape& a, const PolygonShape& b, const RigidMotion2& r) {
    Point2 c = centroid(a);
    PolygonShape centered = translate(a, {-c.x, -c.y});
    return intersection_area(apply_motion(centered, r), b);
}

MatchResult match_translations(const PolygonShape& a, const PolygonShape& b,
                               const MatchOptions& options) {
    validate_shape(a);
    validate_shape(b);
    if (options.budget < 0) throw validation_error("budget must be non-negative");

    SearchSpace sp;
    sp.a = &a;
    sp.b = &b;
    sp.rigid = false;
    sp.half_per = 0.5 * perimeter(a);
    sp.cap = std::min(area(a), area(b));
    sp.abox = bounding_box(a);
    sp.bbox_b = bounding_box(b);
    double gap_target = resolve_gap_target(options, sp.cap);

    Box2 box;
    if (options.search_box) {
        box = *options.search_box;
        if (!(box.min.x <= box.max.x) || !(box.min.y <= box.max.y)) {
            throw validation_error("search box is inverted");
        }
    } else {
        box = translation_search_box(a, b);
    }

    MotionCell root = make_cell(sp, 0.0, 0.0, box.min.x, box.max.x, box.min.y, box.max.y);
    RawResult raw = run_search(sp, root, gap_target, options.budget, options);

    MatchResult result;
    result.best_motion = {0.0, {raw.best_at[1], raw.best_at[2]}};
    result.best_value = raw.best;
    result.certified_upper = std::max(raw.certified, raw.best);
    result.gap = result.certified_upper - result.best_value;
    result.cells_expanded = raw.expanded;
    result.status = raw.status;
    return result;
}

MatchResult match_translations(const PolygonShape& a, const PolygonShape& b, double gap_target,
                               std::int64_t budget) {
    if (!(gap_target > 0.0)) throw validation_error("gap target must be positive");
    MatchOptions options;
    options.gap_target = gap_target;
    options.budget = budget;
    return match_translations(a, b, options);
}

MatchResult match_rigid(const PolygonShape& a, const PolygonShape& b,
                        const MatchOptions& options) {
    validate_shape(a);
    validate_shape(b);
    if (options.budget < 0) throw validation_error("budget must be non-negative");

    Point2 c = centroid(a);
    PolygonShape centered = translate(a, {-c.x, -c.y});

    SearchSpace sp;
    sp.a = &centered;
    sp.b = &b;
    sp.rigid = true;
    sp.half_per = 0.5 * perimeter(centered);
    sp.radius = max_radius(centered, {0.0, 0.0});
    sp.cap = std::min(area(centered), area(b));
    sp.abox = bounding_box(centered);
    sp.bbox_b = bounding_box(b);
    double gap_target = resolve_gap_target(options, sp.cap);

    Box2 box;
    if (options.search_box) {
        box = *options.search_box;
        if (!(box.min.x <= box.max.x) || !(box.min.y <= box.max.y)) {
            throw validation_error("search box is inverted");
        }
    } else {
        box = rigid_search_box(a, b);
    }

    MotionCell root =
        make_cell(sp, 0.0, 2.0 * kPi, box.min.x, box.max.x, box.min.y, box.max.y);
    RawResult raw = run_search(sp, root, gap_target, options.budget, options);

    MatchResult result;
    RigidMotion2 centered_best{normalize_angle(raw.best_at[0]),
                               {raw.best_at[1], raw.best_at[2]}};
    result.best_motion = compose(centered_best, RigidMotion2{0.0, {-c.x, -c.y}});
    result.best_value = raw.best;
    result.certified_upper = std::max(raw.certified, raw.best);
    result.gap = result.certified_upper - result.best_value;
    result.cells_expanded = raw.expanded;
    result.status = raw.status;
    return result;
}

MatchResult match_rigid(const PolygonShape& a, const PolygonShape& b, double gap_target,
                        std::int64_t budget) {
    if (!(gap_target > 0.0)) throw validation_error("gap target must be positive");
    MatchOptions options;
    options.gap_target = gap_target;
    options.budget = budget;
    return match_rigid(a, b, options);
}

std::vector<LandscapeRow> landscape(const PolygonShape& a, const PolygonShape& b,
                                    int theta_samples, int t_samples) {
    validate_shape(a);
    validate_shape(b);
    if (theta_samples < 1 || t_samples < 1) {
        throw validation_error("sample counts must be at least 1");
    }
    Box2 ba = bounding_box(a);
    Box2 bb = bounding_box(b);
    double tx_lo = bb.min.x - ba.max.x;
    double tx_hi = bb.max.x - ba.min.x;
    double ty_lo = bb.min.y - ba.max.y;
    double ty_hi = bb.max.y - ba.min.y;

    auto coord = [&](double lo, double hi, int i) {
        if (t_samples == 1) return 0.5 * (lo + hi);
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(t_samples - 1);
    };

    std::vector<LandscapeRow> rows;
    rows.reserve(static_cast<std::size_t>(theta_samples) * t_samples * t_samples);
    for (int j = 0; j < theta_samples; ++j) {
        double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(theta_samples);
        for (int ix = 0; ix < t_samples; ++ix) {
            double tx = coord(tx_lo, tx_hi, ix);
            for (int iy = 0; iy < t_samples; ++iy) {
                double ty = coord(ty_lo, ty_hi, iy);
                LandscapeRow row;
                row.theta = theta;
                row.tx = tx;
                row.ty = ty;
                row.value = overlap_value(a, {theta, {tx, ty}}, b);
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::string match_result_json(const MatchResult& result) {
    nlohmann::ordered_json j;
    j["theta"] = result.best_motion.theta;
    j["tx"] = result.best_motion.t.x;
    j["ty"] = result.best_motion.t.y;
    j["best_value"] = result.best_value;
    j["certified_upper"] = result.certified_upper;
    j["gap"] = result.gap;
    j["cells_expanded"] = result.cells_expanded;
    j["status"] = to_string(result.status);
    return j.dump();
}

}  // namespace symdiff
