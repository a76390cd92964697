#include "symdiff/boolean_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace symdiff {

namespace detail {

namespace {

struct Cell {
    double x0, x1;        // slab bounds
    double lo0, lo1;      // lower segment y at x0, x1
    double hi0, hi1;      // upper segment y at x0, x1
    bool in_a, in_b;
};

double lerp_y(const SweepSegment& s, double x) {
    if (x == s.x0) return s.y0;
    if (x == s.x1) return s.y1;
    return s.y0 + (s.y1 - s.y0) * ((x - s.x0) / (s.x1 - s.x0));
}

double coordinate_scale(const std::vector<SweepSegment>& segs) {
    double m = 1.0;
    for (const auto& s : segs) {
        m = std::max({m, std::abs(s.x0), std::abs(s.x1), std::abs(s.y0), std::abs(s.y1)});
    }
    return m;
}

// Abscissas where two co-active segments swap vertical order. The swap is
// detected with the same interpolation the sweep uses to sort cells, so any
// order change a slab could observe gets a boundary here. With opposite-sign
// gaps the divisor d0 - d1 never cancels, which keeps the computed abscissa
// within a few ulps of the true swap regardless of how steep or nearly
// parallel the pair is.
void append_crossings(const std::vector<SweepSegment>& segs, std::vector<double>& xs) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            double lo = std::max(segs[i].x0, segs[j].x0);
            double hi = std::min(segs[i].x1, segs[j].x1);
            if (!(lo < hi)) continue;
            double d0 = lerp_y(segs[i], lo) - lerp_y(segs[j], lo);
            double d1 = lerp_y(segs[i], hi) - lerp_y(segs[j], hi);
            if (d0 == 0.0 || d1 == 0.0 || (d0 > 0) == (d1 > 0)) continue;
            double x = lo + (hi - lo) * (d0 / (d0 - d1));
            xs.push_back(std::clamp(x, lo, hi));
        }
    }
}

template <typename CellFn>
void sweep(const std::vector<SweepSegment>& segs, CellFn&& fn) {
    if (segs.empty()) return;
    double neg_tol = 1e-7 * coordinate_scale(segs);

    std::vector<double> xs;
    xs.reserve(segs.size() * 2);
    for (const auto& s : segs) {
        xs.push_back(s.x0);
        xs.push_back(s.x1);
    }
    append_crossings(segs, xs);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<std::size_t> order(segs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        return segs[p].x0 < segs[q].x0 || (segs[p].x0 == segs[q].x0 && p < q);
    });

    struct Item {
        double y;
        std::size_t idx;
    };
    std::vector<std::size_t> active;
    std::vector<Item> items;
    std::size_t next = 0;

    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
        double x0 = xs[s], x1 = xs[s + 1];
        if (!(x1 > x0)) continue;
        std::erase_if(active, [&](std::size_t idx) { return segs[idx].x1 <= x0; });
        while (next < order.size() && segs[order[next]].x0 <= x0) {
            if (segs[order[next]].x1 > x0) active.push_back(order[next]);
            ++next;
        }
        if (active.size() < 2) {
            if (!active.empty()) throw clipping_error("lone boundary segment in slab");
            continue;
        }

        double xm = 0.5 * (x0 + x1);
        items.clear();
        for (std::size_t idx : active) items.push_back({lerp_y(segs[idx], xm), idx});
        // Ties sort by full segment coordinates so that coincident twins from
        // the two operands land adjacent (a first); the walk then sees their
        // gap as a zero-height cell and identical operands overlay exactly.
        std::sort(items.begin(), items.end(), [&](const Item& p, const Item& q) {
            if (p.y != q.y) return p.y < q.y;
            const auto& sp = segs[p.idx];
            const auto& sq = segs[q.idx];
            auto kp = std::tie(sp.x0, sp.y0, sp.x1, sp.y1);
            auto kq = std::tie(sq.x0, sq.y0, sq.x1, sq.y1);
            if (kp != kq) return kp < kq;
            if (sp.from_b != sq.from_b) return !sp.from_b;
            return p.idx < q.idx;
        });

        int par_a = 0, par_b = 0;
        for (std::size_t k = 0; k < items.size(); ++k) {
            (segs[items[k].idx].from_b ? par_b : par_a) ^= 1;
            if (k + 1 == items.size()) break;
            bool in_a = par_a != 0, in_b = par_b != 0;
            if (!in_a && !in_b) continue;
            const auto& lo = segs[items[k].idx];
            const auto& hi = segs[items[k + 1].idx];
            Cell cell{x0, x1, lerp_y(lo, x0), lerp_y(lo, x1), lerp_y(hi, x0), lerp_y(hi, x1),
                      in_a, in_b};
            if (cell.hi0 - cell.lo0 < -neg_tol || cell.hi1 - cell.lo1 < -neg_tol) {
                throw clipping_error("crossed cell inside slab, overlay inconsistent");
            }
            fn(cell);
        }
        if (par_a != 0 || par_b != 0) {
            throw clipping_error("odd boundary parity in slab, overlay inconsistent");
        }
    }
}

double cell_area(const Cell& c) {
    return 0.5 * ((c.hi0 - c.lo0) + (c.hi1 - c.lo1)) * (c.x1 - c.x0);
}

}  // namespace

SweepTotals sweep_totals(const std::vector<SweepSegment>& segments) {
    SweepTotals totals;
    sweep(segments, [&](const Cell& c) {
        double a = cell_area(c);
        if (c.in_a && c.in_b) {
            totals.inter += a;
        } else if (c.in_a) {
            totals.only_a += a;
        } else {
            totals.only_b += a;
        }
    });
    return totals;
}

std::vector<SweepSegment> shape_segments(const PolygonShape& shape, bool from_b) {
    double m = 1.0;
    for (const auto& ring : shape.rings) {
        for (Point2 v : ring.vertices) {
            m = std::max({m, std::abs(v.x), std::abs(v.y)});
        }
    }
    // An edge whose x extent is this thin would sweep with a slope so steep
    // that crossing abscissas stop being representable between its endpoints.
    // Splitting it into an exact vertical (no slab area) plus a flat stitch at
    // its far end keeps the ring closed while bounding every surviving slope;
    // the area this moves is the sliver triangle, at most half extent * height.
    double vert_eps = 4e-8 * m;
    std::vector<SweepSegment> segs;
    for (const auto& ring : shape.rings) {
        const auto& vs = ring.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Point2 p = vs[i];
            Point2 q = vs[(i + 1) % vs.size()];
            if (p.x == q.x) continue;  // vertical edges carry no slab area
            if (std::abs(q.x - p.x) <= vert_eps) p = {p.x, q.y};
            if (p.x < q.x) {
                segs.push_back({p.x, p.y, q.x, q.y, from_b});
            } else {
                segs.push_back({q.x, q.y, p.x, p.y, from_b});
            }
        }
    }
    return segs;
}

PolygonShape snap_to_operand(const PolygonShape& a, const PolygonShape& b) {
    std::vector<Point2> anchors;
    for (const auto& ring : a.rings) {
        anchors.insert(anchors.end(), ring.vertices.begin(), ring.vertices.end());
    }
    PolygonShape out = b;
    for (auto& ring : out.rings) {
        for (auto& v : ring.vertices) {
            Point2 best = v;
            double best_d = kSnapEps;
            for (Point2 c : anchors) {
                if (std::abs(c.x - v.x) > kSnapEps || std::abs(c.y - v.y) > kSnapEps) continue;
                double d = dist(c, v);
                if (d < best_d ||
                    (d == best_d && (c.x < best.x || (c.x == best.x && c.y < best.y)))) {
                    best = c;
                    best_d = d;
                }
            }
            v = best;
        }
    }
    return out;
}

}  // namespace detail

namespace {

bool boxes_disjoint(const Box2& p, const Box2& q) {
    return p.max.x < q.min.x || q.max.x < p.min.x || p.max.y < q.min.y || q.max.y < p.min.y;
}

detail::SweepTotals overlay_totals(const PolygonShape& a, const PolygonShape& b) {
    PolygonShape snapped = detail::snap_to_operand(a, b);
    auto segs = detail::shape_segments(a, false);
    auto more = detail::shape_segments(snapped, true);
    segs.insert(segs.end(), more.begin(), more.end());
    return detail::sweep_totals(segs);
}

}  // namespace

double intersection_area(const PolygonShape& a, const PolygonShape& b) {
    if (boxes_disjoint(bounding_box(a), bounding_box(b))) return 0.0;
    double result = overlay_totals(a, b).inter;
    double cap = std::min(area(a), area(b));
    double guard = 1e-9 * std::max(1.0, cap);
    if (result < -guard || result > cap + guard) {
        throw clipping_error("intersection area outside [0, min(area)] bounds");
    }
    return std::clamp(result, 0.0, cap);
}

double symdiff_area(const PolygonShape& a, const PolygonShape& b) {
    if (boxes_disjoint(bounding_box(a), bounding_box(b))) return area(a) + area(b);
    auto totals = overlay_totals(a, b);
    double result = totals.only_a + totals.only_b;
    return std::max(result, 0.0);
}

double overlap_value(const PolygonShape& a, const RigidMotion2& r, const PolygonShape& b) {
    return intersection_area(apply_motion(a, r), b);
}

namespace {

ClipResult clip_region(const PolygonShape& a, const PolygonShape& b, bool want_intersection) {
    ClipResult result;
    if (boxes_disjoint(bounding_box(a), bounding_box(b))) {
        if (want_intersection) return result;
        result.pieces = a;
        for (const auto& ring : b.rings) result.pieces.rings.push_back(ring);
        result.area = area(a) + area(b);
        return result;
    }
    PolygonShape snapped = detail::snap_to_operand(a, b);
    auto segs = detail::shape_segments(a, false);
    auto more = detail::shape_segments(snapped, true);
    segs.insert(segs.end(), more.begin(), more.end());

    double total = 0.0;
    detail::sweep(segs, [&](const auto& c) {
        bool wanted = want_intersection ? (c.in_a && c.in_b) : (c.in_a != c.in_b);
        if (!wanted) return;
        Point2 quad[4] = {{c.x0, c.lo0}, {c.x1, c.lo1}, {c.x1, c.hi1}, {c.x0, c.hi0}};
        std::vector<Point2> verts;
        for (Point2 p : quad) {
            if (verts.empty() || dist(verts.back(), p) > kSnapEps) verts.push_back(p);
        }
        while (verts.size() >= 2 && dist(verts.front(), verts.back()) <= kSnapEps) verts.pop_back();
        if (verts.size() < 3) return;
        double piece_area = signed_ring_area(verts);
        if (piece_area <= 0.0) return;
        result.pieces.rings.push_back({std::move(verts), RingOrientation::ccw});
        total += piece_area;
    });
    result.area = total;
    return result;
}

}  // namespace

ClipResult clip_intersection(const PolygonShape& a, const PolygonShape& b) {
    return clip_region(a, b, true);
}

ClipResult clip_symdiff(const PolygonShape& a, const PolygonShape& b) {
    return clip_region(a, b, false);
}

}  // namespace symdiff
