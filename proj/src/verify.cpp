#include "symdiff/verify.hpp"

#include "symdiff/boolean_ops.hpp"
#include "symdiff/bounds.hpp"
#include "symdiff/covariogram.hpp"
#include "symdiff/grid_oracle.hpp"
#include "symdiff/matcher.hpp"
#include "symdiff/random_shapes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

namespace symdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const char* what, std::int64_t instance = -1, double got = kNaN,
                double limit = kNaN) {
        ++result_.checks;
        if (ok) return;
        ++result_.failures;
        if (!result_.detail.empty()) return;
        std::ostringstream os;
        os << what;
        if (instance >= 0) os << " [instance " << instance << "]";
        if (got == got) os << ", got " << fmt(got);
        if (limit == limit) os << ", limit " << fmt(limit);
        result_.detail = os.str();
    }

    template <typename Fn>
    void expect_reject(Fn&& fn, const char* what) {
        bool threw = false;
        try {
            fn();
        } catch (const validation_error&) {
            threw = true;
        }
        expect(threw, what);
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

// Each suite draws from its own stream so adding instances to one suite never
// shifts another.
std::uint64_t suite_seed(std::uint64_t seed, const char* name) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char* p = name; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
    return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

PolygonShape unit_square_shape() {
    Ring r;
    r.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    r.orientation = RingOrientation::ccw;
    PolygonShape s;
    s.rings.push_back(r);
    return s;
}

PolygonShape thin_rectangle(double eps) {
    Ring r;
    r.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.0, eps}, {0.0, eps}};
    r.orientation = RingOrientation::ccw;
    PolygonShape s;
    s.rings.push_back(r);
    return s;
}

StarParams small_star_params() {
    StarParams p;
    p.min_vertices = 5;
    p.max_vertices = 8;
    p.center_range = 0.8;
    p.radius_min = 0.8;
    p.radius_max = 1.5;
    p.hole_chance = 0.0;
    return p;
}

// ---------------------------------------------------------------------------

SuiteResult suite_geometry(std::uint64_t seed, int) {
    Suite s("geometry");
    Rng rng(seed);
    StarParams params;
    for (int i = 0; i < 200; ++i) {
        PolygonShape shape = random_star(rng, params);
        RigidMotion2 r = random_motion(rng, 5.0);
        PolygonShape moved = apply_motion(shape, r);
        double a0 = area(shape);
        double a1 = area(moved);
        s.expect(std::abs(a1 - a0) <= 1e-12 * std::max(1.0, a0),
                 "area is invariant under rigid motions", i, a1, a0);
        double p0 = perimeter(shape);
        double p1 = perimeter(moved);
        s.expect(std::abs(p1 - p0) <= 1e-12 * std::max(1.0, p0),
                 "perimeter is invariant under rigid motions", i, p1, p0);

        RigidMotion2 q = random_motion(rng, 5.0);
        Point2 x{rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0)};
        double comp_err = dist(apply(compose(r, q), x), apply(r, apply(q, x)));
        s.expect(comp_err <= 1e-12, "composition matches sequential application", i, comp_err,
                 1e-12);
        double inv_err = dist(apply(invert(r), apply(r, x)), x);
        s.expect(inv_err <= 1e-12, "inverse undoes a motion", i, inv_err, 1e-12);

        double hull_area = area(convex_hull(shape));
        s.expect(hull_area >= a0 - 1e-12 * std::max(1.0, a0),
                 "hull area dominates shape area", i, hull_area, a0);
    }
    // max_radius against brute-force boundary sampling (max distance along an
    // edge is attained at a vertex, so endpoint samples find the true value).
    for (int i = 0; i < 20; ++i) {
        PolygonShape shape = random_star(rng, params);
        Point2 c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        double exact = max_radius(shape, c);
        double brute = 0.0;
        for (const Ring& ring : shape.rings) {
            std::size_t n = ring.vertices.size();
            for (std::size_t k = 0; k < n; ++k) {
                Point2 a = ring.vertices[k];
                Point2 b = ring.vertices[(k + 1) % n];
                for (int m = 0; m <= 20; ++m) {
                    double lam = static_cast<double>(m) / 20.0;
                    brute = std::max(brute, dist(c, a + lam * (b - a)));
                }
            }
        }
        s.expect(std::abs(exact - brute) <= 1e-9,
                 "max radius equals the dense boundary maximum", i, exact, brute);
    }
    return s.take();
}

SuiteResult suite_boolean(std::uint64_t seed, int) {
    Suite s("boolean");
    Rng rng(seed);
    for (int i = 0; i < 200; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        double iab = intersection_area(a, b);
        double iba = intersection_area(b, a);
        s.expect(std::abs(iab - iba) <= 1e-12 * std::max(1.0, iab),
                 "intersection area is symmetric", i, iba, iab);
        s.expect(symdiff_area(a, a) == 0.0, "self symmetric difference is exactly zero", i);
        double amin = std::min(area(a), area(b));
        s.expect(iab <= amin + 1e-9 * std::max(1.0, amin),
                 "intersection is at most the smaller area", i, iab, amin);
        double sd = symdiff_area(a, b);
        double sum = area(a) + area(b);
        s.expect(sd <= sum + 1e-9 * std::max(1.0, sum), "symdiff is at most the area sum", i,
                 sd, sum);
        s.expect(std::abs(sum - sd - 2.0 * iab) <= 1e-9 * std::max(1.0, sum),
                 "inclusion-exclusion ties symdiff to intersection", i, sd + 2.0 * iab, sum);
    }
    for (int i = 0; i < 100; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        PolygonShape c = random_compact_star(rng);
        double ab = symdiff_area(a, b);
        double bc = symdiff_area(b, c);
        double ac = symdiff_area(a, c);
        s.expect(ac <= ab + bc + 1e-9, "symdiff satisfies the triangle inequality", i, ac,
                 ab + bc);
    }
    for (int i = 0; i < 50; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        ClipResult clip = clip_intersection(a, b);
        double direct = intersection_area(a, b);
        s.expect(std::abs(clip.area - direct) <= 1e-9 * std::max(1.0, direct),
                 "clip area matches the intersection area", i, clip.area, direct);
        double pieces = area(clip.pieces);
        s.expect(std::abs(pieces - clip.area) <= 1e-9 * std::max(1.0, clip.area),
                 "clip pieces sum to the reported area", i, pieces, clip.area);
    }
    return s.take();
}

SuiteResult suite_translation(std::uint64_t seed, int) {
    Suite s("translation");
    Rng rng(seed);
    StarParams params;
    for (int i = 0; i < 1000; ++i) {
        PolygonShape shape = random_star(rng, params);
        Point2 t = (i == 0) ? Point2{0.0, 0.0} : random_translation(rng, 5.0);
        BoundReport rep = translation_symdiff_bound(shape, t);
        s.expect(rep.slack >= -1e-9 * std::max(1.0, rep.rhs), "translation bound holds", i,
                 rep.slack, 0.0);
        if (i % 25 == 0) {
            BoundReport twice = translation_symdiff_bound(shape, {2.0 * t.x, 2.0 * t.y});
            s.expect(std::abs(twice.rhs - 2.0 * rep.rhs) <= 1e-12 * std::max(1.0, twice.rhs),
                     "bound scales linearly in the step", i, twice.rhs, 2.0 * rep.rhs);
        }
    }
    return s.take();
}

SuiteResult suite_rotation(std::uint64_t seed, int) {
    Suite s("rotation");
    Rng rng(seed);
    StarParams params;
    for (int i = 0; i < 500; ++i) {
        PolygonShape shape = random_star(rng, params);
        double theta = (i == 0) ? 0.0 : rng.uniform(0.0, 2.0 * kPi);
        Point2 center{0.0, 0.0};
        if (i % 3 == 1) center = centroid(shape);
        if (i % 3 == 2) center = {rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0)};
        BoundReport gen = rotation_symdiff_bound(shape, theta, center, RotationVariant::general);
        BoundReport rect =
            rotation_symdiff_bound(shape, theta, center, RotationVariant::rectifiable);
        s.expect(gen.slack >= -1e-9 * std::max(1.0, gen.rhs), "general rotation bound holds", i,
                 gen.slack, 0.0);
        s.expect(rect.slack >= -1e-9 * std::max(1.0, rect.rhs),
                 "polygonal rotation bound holds", i, rect.slack, 0.0);
        s.expect(gen.rhs >= rect.rhs - 1e-12 * std::max(1.0, gen.rhs),
                 "general constant dominates the polygonal one", i, gen.rhs, rect.rhs);
        s.expect(rect.lhs == gen.lhs, "variants measure the same quantity", i, rect.lhs,
                 gen.lhs);
    }
    for (int i = 0; i < 5; ++i) {
        PolygonShape shape = random_star(rng, params);
        Point2 c = centroid(shape);
        double prev = -1.0;
        for (int k = 0; k <= 40; ++k) {
            double theta = kPi * static_cast<double>(k) / 40.0;
            BoundReport rep =
                rotation_symdiff_bound(shape, theta, c, RotationVariant::rectifiable);
            s.expect(rep.rhs >= prev - 1e-12, "bound grows with the angle on [0, pi]",
                     i * 100 + k, rep.rhs, prev);
            prev = rep.rhs;
        }
    }
    return s.take();
}

SuiteResult suite_rigid(std::uint64_t seed, int) {
    Suite s("rigid");
    Rng rng(seed);
    StarParams params;
    for (int i = 0; i < 500; ++i) {
        PolygonShape shape = random_star(rng, params);
        RigidMotion2 r = random_motion(rng, 5.0);
        BoundReport rep = rigid_motion_symdiff_bound(shape, r);
        s.expect(rep.slack >= -1e-9 * std::max(1.0, rep.rhs), "rigid motion bound holds", i,
                 rep.slack, 0.0);
    }
    // A rigid motion without translation is a rotation about the origin; both
    // report paths must agree.
    for (int i = 0; i < 50; ++i) {
        PolygonShape shape = random_star(rng, params);
        double theta = rng.uniform(0.0, 2.0 * kPi);
        BoundReport rig = rigid_motion_symdiff_bound(shape, {theta, {0.0, 0.0}});
        BoundReport rot =
            rotation_symdiff_bound(shape, theta, {0.0, 0.0}, RotationVariant::rectifiable);
        s.expect(std::abs(rig.rhs - rot.rhs) <= 1e-12 * std::max(1.0, rot.rhs),
                 "pure-rotation bounds agree", i, rig.rhs, rot.rhs);
        s.expect(std::abs(rig.lhs - rot.lhs) <= 1e-9 * std::max(1.0, rot.lhs),
                 "pure-rotation measurements agree", i, rig.lhs, rot.lhs);
    }
    return s.take();
}

SuiteResult suite_lipschitz(std::uint64_t seed, int) {
    Suite s("lipschitz");
    Rng rng(seed);
    StarParams params;
    for (int i = 0; i < 500; ++i) {
        PolygonShape a = random_star(rng, params);
        PolygonShape b = random_star(rng, params);
        RigidMotion2 r = random_motion(rng, 5.0);
        RigidMotion2 q;
        if (i % 2 == 0) {
            q = random_motion(rng, 5.0);
        } else {
            q.theta = normalize_angle(r.theta + rng.uniform(-0.2, 0.2));
            q.t = {r.t.x + rng.uniform(-0.2, 0.2), r.t.y + rng.uniform(-0.2, 0.2)};
        }
        double fr = overlap_value(a, r, b);
        double fq = overlap_value(a, q, b);
        double bound = overlap_lipschitz_bound(a, r, q);
        s.expect(std::abs(fr - fq) <= bound + 1e-9, "overlap change stays under the bound", i,
                 std::abs(fr - fq), bound);
    }
    return s.take();
}

SuiteResult suite_constants(std::uint64_t seed, int) {
    (void)seed;
    Suite s("constants");
    s.expect(rotation_constant(1).value == 1.0, "dimension 1 constant is exactly 1");
    s.expect(std::abs(rotation_constant(2).value - std::sqrt(4.0 / 3.0)) <= 1e-15,
             "dimension 2 constant", rotation_constant(2).value, std::sqrt(4.0 / 3.0));
    s.expect(std::abs(rotation_constant(3).value - 1.5) <= 1e-15, "dimension 3 constant",
             rotation_constant(3).value, 1.5);
    double prev_base = 0.0;
    for (int d = 1; d <= 100; ++d) {
        double base = std::sqrt(2.0 * d / (d + 1.0));
        s.expect(base < std::sqrt(2.0), "per-dimension base stays below sqrt(2)", d, base,
                 std::sqrt(2.0));
        s.expect(base > prev_base, "per-dimension base increases", d, base, prev_base);
        prev_base = base;
        s.expect(rotation_constant(d).value >= 1.0, "constant is at least 1", d,
                 rotation_constant(d).value, 1.0);
    }
    s.expect_reject([] { rotation_constant(0); }, "dimension 0 is rejected");
    s.expect_reject([] { rotation_constant(-3); }, "negative dimension is rejected");
    return s.take();
}

SuiteResult suite_sharpness(std::uint64_t seed, int) {
    Suite s("sharpness");
    Rng rng(seed);
    for (double eps : {1e-3, 1e-6}) {
        PolygonShape rect = thin_rectangle(eps);
        BoundReport rep = translation_symdiff_bound(rect, {0.0, 0.5 * eps});
        s.expect(std::abs(rep.lhs - eps) <= 1e-9, "thin rectangle symdiff equals eps", -1,
                 rep.lhs, eps);
        double rhs_exact = eps * (1.0 + eps);
        s.expect(std::abs(rep.rhs - rhs_exact) <= 1e-12 * rhs_exact,
                 "thin rectangle bound equals eps(1+eps)", -1, rep.rhs, rhs_exact);
        double ratio = rep.lhs / rep.rhs;
        s.expect(ratio >= 1.0 / (1.0 + eps) - 1e-12, "bound is attained up to 1/(1+eps)", -1,
                 ratio, 1.0 / (1.0 + eps));
    }
    // Swept-area identity: exact for a unit square pushed along an axis and
    // along the diagonal.
    ConvexPolygon square = convex_hull(unit_square_shape());
    s.expect(std::abs(cavalieri_sweep_area(square, {2.0, 0.0}) - 3.0) <= 1e-12,
             "axis sweep of the unit square", -1, cavalieri_sweep_area(square, {2.0, 0.0}),
             3.0);
    s.expect(std::abs(cavalieri_sweep_area(square, {1.0, 1.0}) - 3.0) <= 1e-12,
             "diagonal sweep of the unit square", -1,
             cavalieri_sweep_area(square, {1.0, 1.0}), 3.0);
    for (int i = 0; i < 50; ++i) {
        ConvexPolygon poly = random_derivative_test_polygon(rng);
        Point2 t = random_translation(rng, 3.0);
        BoundReport rep = cavalieri_report(poly, t);
        s.expect(std::abs(rep.slack) <= 1e-9 * std::max(1.0, rep.rhs),
                 "sweep formula is exact for convex shapes", i, rep.slack, 0.0);
    }
    return s.take();
}

SuiteResult suite_covariogram(std::uint64_t seed, int) {
    Suite s("covariogram");
    Rng rng(seed);
    StarParams params;
    for (int i = 0; i < 100; ++i) {
        PolygonShape shape = random_star(rng, params);
        Point2 t = random_translation(rng, 3.0);
        double g0 = covariogram_value(shape, {0.0, 0.0});
        double gt = covariogram_value(shape, t);
        double gmt = covariogram_value(shape, {-t.x, -t.y});
        double a = area(shape);
        s.expect(std::abs(gt - gmt) <= 1e-12 * std::max(1.0, gt), "covariogram is even", i, gmt,
                 gt);
        s.expect(gt <= g0 + 1e-9 * std::max(1.0, g0), "covariogram peaks at zero", i, gt, g0);
        s.expect(std::abs(g0 - a) <= 1e-12 * std::max(1.0, a),
                 "covariogram at zero equals the area", i, g0, a);
        double sd = symdiff_area(shape, translate(shape, t));
        s.expect(std::abs((g0 - gt) - 0.5 * sd) <= 1e-9 * std::max(1.0, g0),
                 "covariogram drop is half the symdiff", i, g0 - gt, 0.5 * sd);
        double cross = cross_covariogram_value(shape, shape, t);
        s.expect(std::abs(cross - gt) <= 1e-12 * std::max(1.0, gt),
                 "cross covariogram of a shape with itself", i, cross, gt);
    }
    PolygonShape sq = unit_square_shape();
    auto grid = covariogram_grid(sq, {1.0, 1.0}, 2);
    s.expect(grid.size() == 25, "grid has (2n+1)^2 samples", -1,
             static_cast<double>(grid.size()), 25.0);
    bool even = true;
    for (const CovariogramSample& sample : grid) {
        double mirror = covariogram_value(sq, {-sample.tx, -sample.ty});
        even = even && std::abs(mirror - sample.value) <= 1e-12;
    }
    s.expect(even, "grid samples are even in t");
    return s.take();
}

SuiteResult suite_matheron(std::uint64_t seed, int) {
    Suite s("matheron");
    Rng rng(seed);
    PolygonShape sq = unit_square_shape();
    double q = directional_derivative(sq, {1.0, 0.0}, 1e-4);
    s.expect(std::abs(q - (-1.0)) <= 1e-9, "unit square derivative along x", -1, q, -1.0);

    for (int i = 0; i < 50; ++i) {
        ConvexPolygon poly = random_derivative_test_polygon(rng);
        PolygonShape shape = to_shape(poly);
        for (int j = 0; j < 8; ++j) {
            double phi = static_cast<double>(j) * kPi / 4.0 + kPi / 24.0;
            Point2 u{std::cos(phi), std::sin(phi)};
            double ext = projection_extent(poly, u);
            double quot = directional_derivative(shape, u, 1e-4);
            s.expect(std::abs(quot + ext) <= 1e-3 * std::max(1.0, ext),
                     "difference quotient recovers the projection extent", i * 8 + j, -quot,
                     ext);
        }
    }

    Ring ell;
    ell.vertices = {{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 2.0}};
    ell.orientation = RingOrientation::ccw;
    PolygonShape ell_shape;
    ell_shape.rings.push_back(ell);
    s.expect_reject([&] { directional_derivative(ell_shape, {1.0, 0.0}, 1e-4); },
                    "non-convex input is rejected");
    s.expect_reject([&] { directional_derivative(sq, {1.0, 0.0}, 0.0); },
                    "zero step is rejected");
    s.expect_reject([&] { directional_derivative(sq, {0.0, 0.0}, 1e-4); },
                    "zero direction is rejected");
    return s.take();
}

SuiteResult suite_comb(std::uint64_t seed, int workers) {
    (void)seed;
    Suite s("comb");
    for (int k : {1, 2, 3, 7, 50}) {
        CombReport rep = comb_demo(k);
        double w = 0.5 / static_cast<double>(k);
        s.expect(std::abs(rep.symdiff - 1.0) <= 1e-9, "one-tooth shift swaps teeth and gaps", k,
                 rep.symdiff, 1.0);
        s.expect(rep.translation_rhs >= 1.0 - 1e-12, "perimeter bound still holds", k,
                 rep.translation_rhs, 1.0);
        s.expect(std::abs(rep.translation_rhs - (1.0 + w)) <= 1e-12,
                 "perimeter bound value", k, rep.translation_rhs, 1.0 + w);
        s.expect(std::abs(rep.projection_quantity - w) <= 1e-12,
                 "projection quantity shrinks with tooth count", k, rep.projection_quantity,
                 w);
        double hull_area = area(convex_hull(comb_shape(k)));
        s.expect(std::abs(hull_area - (1.0 - w)) <= 1e-12, "hull fills the bounding rectangle",
                 k, hull_area, 1.0 - w);
    }
    CombReport fifty = comb_demo(50);
    s.expect(fifty.projection_quantity <= 0.02, "projection quantity at fifty teeth", 50,
             fifty.projection_quantity, 0.02);
    CoveringReport cover =
        covering_check_translation(comb_shape(5), {0.1, 0.0}, 1e-3, workers);
    s.expect(cover.violations == 0, "comb symdiff is covered by translation segments", 5,
             static_cast<double>(cover.violations), 0.0);
    s.expect(cover.interior_points > 0, "comb covering check is not vacuous", 5,
             static_cast<double>(cover.interior_points), 1.0);
    return s.take();
}

SuiteResult suite_covering(std::uint64_t seed, int workers) {
    Suite s("covering");
    Rng rng(seed);
    for (int i = 0; i < 20; ++i) {
        PolygonShape shape = random_compact_star(rng);
        double ang = rng.uniform(0.0, 2.0 * kPi);
        double len = rng.uniform(0.3, 1.0);
        Point2 t{len * std::cos(ang), len * std::sin(ang)};
        CoveringReport rep = covering_check_translation(shape, t, 1e-2, workers);
        s.expect(rep.violations == 0, "translation covering has no violations", i,
                 static_cast<double>(rep.violations), 0.0);
        double sd = symdiff_area(shape, translate(shape, t));
        if (sd > 0.6) {
            s.expect(rep.interior_points > 0, "translation covering is not vacuous", i,
                     static_cast<double>(rep.interior_points), 1.0);
        }
    }
    for (int i = 0; i < 20; ++i) {
        PolygonShape shape = random_compact_star(rng);
        double theta = (i % 2 == 0) ? rng.uniform(0.05, 0.5) : rng.uniform(0.5, kPi);
        CoveringReport rep = covering_check_rotation(shape, theta, 1e-2, workers);
        s.expect(rep.violations == 0, "rotation covering has no violations", i,
                 static_cast<double>(rep.violations), 0.0);
        PolygonShape turned = apply_motion(shape, {theta, {0.0, 0.0}});
        if (symdiff_area(shape, turned) > 0.6) {
            s.expect(rep.interior_points > 0, "rotation covering is not vacuous", i,
                     static_cast<double>(rep.interior_points), 1.0);
        }
    }
    return s.take();
}

void equalize_counts(GridMask& d, GridMask& g) {
    std::int64_t cd = d.count();
    std::int64_t cg = g.count();
    GridMask& big = cd >= cg ? d : g;
    std::int64_t excess = cd >= cg ? cd - cg : cg - cd;
    for (std::int64_t j = 0; j < big.ny && excess > 0; ++j) {
        for (std::int64_t i = 0; i < big.nx && excess > 0; ++i) {
            if (big.cell(i, j)) {
                big.clear_cell(i, j);
                --excess;
            }
        }
    }
}

SuiteResult suite_difference(std::uint64_t seed, int workers) {
    Suite s("difference");
    Rng rng(seed);
    double h = 0.05;
    for (int i = 0; i < 200; ++i) {
        GridMask d = rasterize(random_compact_star(rng), h, workers);
        GridMask g = rasterize(random_compact_star(rng), h, workers);
        GridMask e = rasterize(random_compact_star(rng), h, workers);
        equalize_counts(d, g);
        s.expect(d.count() == g.count(), "equalized masks have equal measure", i,
                 static_cast<double>(d.count()), static_cast<double>(g.count()));
        DifferenceReport rep = overlap_difference_check(d, g, e);
        s.expect(rep.within_removed, "intersection difference under the removed mass", i,
                 rep.difference, rep.removed);
        s.expect(rep.within_half_symdiff, "intersection difference under half the symdiff", i,
                 rep.difference, rep.half_symdiff);
        s.expect(std::abs(rep.removed - rep.half_symdiff) <= 0.5 * h * h + 1e-12,
                 "removed mass is half the symdiff for equal measures", i, rep.removed,
                 rep.half_symdiff);
    }
    for (int i = 0; i < 10; ++i) {
        GridMask d = rasterize(random_compact_star(rng), h, workers);
        GridMask e = rasterize(random_compact_star(rng), h, workers);
        DifferenceReport rep = overlap_difference_check(d, d, e);
        s.expect(rep.difference == 0.0 && rep.removed == 0.0, "identical masks differ by zero",
                 i, rep.difference, 0.0);
        s.expect(rep.within_removed && rep.within_half_symdiff,
                 "identical masks satisfy both forms", i);
    }
    return s.take();
}

SuiteResult suite_oracle(std::uint64_t seed, int workers) {
    Suite s("oracle");
    Rng rng(seed);
    double h = 1e-2;
    for (int i = 0; i < 200; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        GridMask ra = rasterize(a, h, workers);
        GridMask rb = rasterize(b, h, workers);
        double exact = symdiff_area(a, b);
        double approx = mask_symdiff_area(ra, rb);
        double tol = 2.0 * h * (perimeter(a) + perimeter(b)) + 8.0 * h * h;
        s.expect(std::abs(exact - approx) <= tol, "mask symdiff tracks the exact symdiff", i,
                 std::abs(exact - approx), tol);
    }
    for (int i = 0; i < 100; ++i) {
        PolygonShape shape = random_compact_star(rng);
        for (double hh : {1e-1, 1e-2, 1e-3}) {
            GridMask m = rasterize(shape, hh, workers);
            double err = std::abs(mask_area(m) - area(shape));
            double tol = rasterize_error_bound(shape, hh);
            s.expect(err <= tol, "raster area error stays under the advertised bound", i, err,
                     tol);
        }
    }
    for (int i = 0; i < 50; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        Point2 t = random_translation(rng, 1.0);
        GridMask ra = rasterize(translate(a, t), h, workers);
        GridMask rb = rasterize(b, h, workers);
        double inter_mask =
            0.5 * (mask_area(ra) + mask_area(rb) - mask_symdiff_area(ra, rb));
        double exact = cross_covariogram_value(a, b, t);
        double tol = 2.0 * h * (perimeter(a) + perimeter(b)) + 8.0 * h * h;
        s.expect(std::abs(exact - inter_mask) <= tol,
                 "mask overlap tracks the cross covariogram", i, std::abs(exact - inter_mask),
                 tol);
    }
    for (int i = 0; i < 10; ++i) {
        GridMask m = rasterize(random_compact_star(rng), 0.05, workers);
        std::stringstream ss;
        write_pgm(m, ss);
        GridMask back = read_pgm(ss, m.h, m.origin);
        s.expect(back.nx == m.nx && back.ny == m.ny, "bitmap round-trip keeps dimensions", i);
        s.expect(back.bits == m.bits, "bitmap round-trip keeps every cell", i);
        s.expect(mask_symdiff_area(m, back) == 0.0, "round-tripped mask has zero symdiff", i,
                 mask_symdiff_area(m, back), 0.0);
    }
    return s.take();
}

SuiteResult suite_matcher(std::uint64_t seed, int workers) {
    Suite s("matcher");
    Rng rng(seed);
    StarParams small = small_star_params();

    // Every expanded cell must dominate the objective over its whole box.
    for (int i = 0; i < 6; ++i) {
        bool rigid = i >= 3;
        PolygonShape a = random_star(rng, small);
        PolygonShape b = random_star(rng, small);
        MatchOptions opt;
        opt.gap_target = 0.05 * std::min(area(a), area(b));
        opt.budget = 1200;
        std::vector<MotionCell> trace;
        opt.trace = &trace;
        MatchResult res = rigid ? match_rigid(a, b, opt) : match_translations(a, b, opt);
        s.expect(!trace.empty(), "search expands at least one cell", i,
                 static_cast<double>(trace.size()), 1.0);
        Rng probe(seed ^ (0x517cc1b727220a95ull + static_cast<std::uint64_t>(i)));
        bool sound = true;
        double worst = 0.0;
        for (const MotionCell& c : trace) {
            for (int p = 0; p < 25; ++p) {
                double th = probe.uniform(c.theta_lo, c.theta_hi);
                double tx = probe.uniform(c.tx_lo, c.tx_hi);
                double ty = probe.uniform(c.ty_lo, c.ty_hi);
                double f = rigid ? centered_overlap(a, b, {th, {tx, ty}})
                                 : overlap_value(a, {0.0, {tx, ty}}, b);
                if (f > c.upper_bound + 1e-9) {
                    sound = false;
                    worst = std::max(worst, f - c.upper_bound);
                }
            }
        }
        s.expect(sound, "expanded cells bound their sampled objective", i, worst, 1e-9);
        s.expect(res.certified_upper >= res.best_value, "certificate dominates the incumbent",
                 i, res.certified_upper, res.best_value);
    }

    // Converged certificates beat exhaustive probing of the search domain.
    for (int i = 0; i < 5; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        MatchOptions opt;
        opt.gap_target = 0.02 * std::min(area(a), area(b));
        opt.budget = 200000;
        MatchResult res = match_translations(a, b, opt);
        s.expect(res.status == MatchStatus::converged, "translation search converges", i);
        if (res.status == MatchStatus::converged) {
            s.expect(res.gap <= opt.gap_target + 1e-12, "reported gap meets the target", i,
                     res.gap, opt.gap_target);
        }
        Box2 box = translation_search_box(a, b);
        Rng probe(seed ^ (0x2545f4914f6cdd1dull + static_cast<std::uint64_t>(i)));
        bool ok = true;
        double worst = 0.0;
        for (int p = 0; p < 10000; ++p) {
            Point2 t{probe.uniform(box.min.x, box.max.x), probe.uniform(box.min.y, box.max.y)};
            double f = overlap_value(a, {0.0, t}, b);
            if (f > res.certified_upper + 1e-9) {
                ok = false;
                worst = std::max(worst, f - res.certified_upper);
            }
        }
        s.expect(ok, "no probe beats the certificate", i, worst, 1e-9);
    }

    // Tightening the gap target never yields a worse match.
    for (int i = 0; i < 5; ++i) {
        PolygonShape a = random_compact_star(rng);
        PolygonShape b = random_compact_star(rng);
        double cap = std::min(area(a), area(b));
        double prev = -1.0;
        for (double g : {0.3, 0.1, 0.03, 0.01}) {
            MatchResult res = match_translations(a, b, g * cap, 300000);
            s.expect(res.best_value >= prev - 1e-12, "tighter gaps never lose ground", i,
                     res.best_value, prev);
            prev = res.best_value;
        }
    }

    // Recovery of a planted rigid copy with a certificate audit.
    for (int i = 0; i < 20; ++i) {
        PolygonShape a = random_compact_star(rng);
        RigidMotion2 planted = random_motion(rng, 2.0);
        PolygonShape b = apply_motion(a, planted);
        MatchOptions opt;
        opt.workers = workers;
        MatchResult res = match_rigid(a, b, opt);
        s.expect(res.status == MatchStatus::converged, "rigid recovery converges", i);
        double target = 0.99 * area(a);
        s.expect(res.best_value >= target - 1e-12, "recovered overlap reaches 99 percent", i,
                 res.best_value, target);
        double replay = overlap_value(a, res.best_motion, b);
        s.expect(std::abs(replay - res.best_value) <= 1e-9 * std::max(1.0, res.best_value),
                 "reported motion reproduces the best value", i, replay, res.best_value);
        Box2 box = rigid_search_box(a, b);
        Rng probe(seed ^ (0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(i)));
        bool ok = true;
        double worst = 0.0;
        for (int p = 0; p < 10000; ++p) {
            RigidMotion2 m{probe.uniform(0.0, 2.0 * kPi),
                           {probe.uniform(box.min.x, box.max.x),
                            probe.uniform(box.min.y, box.max.y)}};
            double f = centered_overlap(a, b, m);
            if (f > res.certified_upper + 1e-9) {
                ok = false;
                worst = std::max(worst, f - res.certified_upper);
            }
        }
        s.expect(ok, "no probe beats the recovery certificate", i, worst, 1e-9);
    }

    // Exhausted budgets still return a sound certificate. The lopsided box
    // keeps the optimum away from the root center so the budget really binds.
    {
        PolygonShape sq = unit_square_shape();
        MatchOptions opt;
        opt.gap_target = 1e-6;
        opt.budget = 3;
        opt.search_box = Box2{{-5.0, -5.0}, {3.0, 3.0}};
        MatchResult res = match_translations(sq, sq, opt);
        s.expect(res.status == MatchStatus::budget_exhausted, "tiny budgets report exhaustion");
        s.expect(res.certified_upper >= res.best_value,
                 "exhausted certificate dominates the incumbent", -1, res.certified_upper,
                 res.best_value);
        s.expect(res.certified_upper >= 1.0 - 1e-12,
                 "exhausted certificate still covers the optimum", -1, res.certified_upper,
                 1.0);
    }
    return s.take();
}

using SuiteFn = SuiteResult (*)(std::uint64_t, int);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"geometry", suite_geometry},   {"boolean", suite_boolean},
    {"translation", suite_translation}, {"rotation", suite_rotation},
    {"rigid", suite_rigid},         {"lipschitz", suite_lipschitz},
    {"constants", suite_constants}, {"sharpness", suite_sharpness},
    {"covariogram", suite_covariogram}, {"matheron", suite_matheron},
    {"comb", suite_comb},           {"covering", suite_covering},
    {"difference", suite_difference}, {"oracle", suite_oracle},
    {"matcher", suite_matcher},
};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteEntry& e : kSuites) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int workers) {
    for (const SuiteEntry& e : kSuites) {
        if (name == e.name) return e.fn(suite_seed(seed, e.name), workers);
    }
    throw validation_error("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed,
                                    int workers) {
    std::vector<std::string> expanded;
    for (const std::string& name : names) {
        if (name == "all") {
            for (const SuiteEntry& e : kSuites) expanded.emplace_back(e.name);
        } else {
            expanded.push_back(name);
        }
    }
    std::vector<SuiteResult> out;
    out.reserve(expanded.size());
    for (const std::string& name : expanded) out.push_back(run_suite(name, seed, workers));
    return out;
}

}  // namespace symdiff
