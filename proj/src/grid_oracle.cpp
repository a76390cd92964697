#include "symdiff/grid_oracle.hpp"

#include "symdiff/boolean_ops.hpp"
#include "symdiff/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace symdiff {

namespace {

constexpr std::int64_t kMaxCells = 100000000;  // 1e8

struct Segment {
    Point2 a;
    Point2 b;
};

std::vector<Segment> shape_edges(const PolygonShape& shape) {
    std::vector<Segment> edges;
    for (const Ring& ring : shape.rings) {
        const auto& v = ring.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            edges.push_back({v[i], v[(i + 1) % v.size()]});
        }
    }
    return edges;
}

double orient(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

bool segments_cross(const Segment& s, const Segment& t) {
    double d1 = orient(s.a, s.b, t.a);
    double d2 = orient(s.a, s.b, t.b);
    double d3 = orient(t.a, t.b, s.a);
    double d4 = orient(t.a, t.b, s.b);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
           d4 != 0;
}

double segment_segment_distance(const Segment& s, const Segment& t) {
    if (segments_cross(s, t)) return 0.0;
    double d = dist_point_segment(s.a, t.a, t.b);
    d = std::min(d, dist_point_segment(s.b, t.a, t.b));
    d = std::min(d, dist_point_segment(t.a, s.a, s.b));
    d = std::min(d, dist_point_segment(t.b, s.a, s.b));
    return d;
}

// Lattice frame shared by masks built at the same h: cell (i, j) relative to
// the snapped origin. Returns the integer offset of m's cell (0,0) in ref's
// frame; throws when the lattices are not congruent.
std::pair<std::int64_t, std::int64_t> lattice_offset(const GridMask& ref, const GridMask& m) {
    if (!(ref.h > 0.0) || !(m.h > 0.0) || std::fabs(ref.h - m.h) > 1e-12 * ref.h) {
        throw validation_error("grid masks have different cell sizes");
    }
    double dx = (m.origin.x - ref.origin.x) / ref.h;
    double dy = (m.origin.y - ref.origin.y) / ref.h;
    std::int64_t ix = std::llround(dx);
    std::int64_t iy = std::llround(dy);
    if (std::fabs(dx - static_cast<double>(ix)) > 1e-9 ||
        std::fabs(dy - static_cast<double>(iy)) > 1e-9) {
        throw validation_error("grid masks are not on a common lattice");
    }
    return {ix, iy};
}

bool cell_at(const GridMask& m, std::int64_t di, std::int64_t dj, std::int64_t i,
             std::int64_t j) {
    return m.cell(i - di, j - dj);
}

struct LatticeBox {
    Point2 origin;
    std::int64_t nx = 0;
    std::int64_t ny = 0;
};

// Snaps the working window to integer multiples of h with one cell of margin,
// so independently built masks of overlapping shapes land on one lattice.
LatticeBox snapped_lattice(const Box2& box, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw validation_error("cell size must be positive");
    double i0 = std::floor(box.min.x / h) - 1.0;
    double j0 = std::floor(box.min.y / h) - 1.0;
    double i1 = std::floor(box.max.x / h) + 2.0;
    double j1 = std::floor(box.max.y / h) + 2.0;
    double nx = i1 - i0;
    double ny = j1 - j0;
    if (nx <= 0 || ny <= 0 || nx * ny > static_cast<double>(kMaxCells)) {
        throw resource_error("lattice would exceed the cell budget");
    }
    LatticeBox out;
    out.origin = {i0 * h, j0 * h};
    out.nx = static_cast<std::int64_t>(nx);
    out.ny = static_cast<std::int64_t>(ny);
    return out;
}

std::uint64_t bucket_key(std::int64_t ix, std::int64_t iy) {
    return (static_cast<std::uint64_t>(ix + (1ll << 31)) << 32) ^
           static_cast<std::uint64_t>(iy + (1ll << 31));
}

}  // namespace

namespace {

// Sets cells [i0, i1) of row j using whole-word writes.
void fill_span(GridMask& mask, std::int64_t j, std::int64_t i0, std::int64_t i1) {
    if (i0 >= i1) return;
    std::uint64_t* row = mask.bits.data() + j * mask.stride_words();
    std::int64_t w0 = i0 / 64;
    std::int64_t w1 = (i1 - 1) / 64;
    std::uint64_t first = ~0ull << (i0 % 64);
    std::uint64_t last = ~0ull >> (63 - ((i1 - 1) % 64));
    if (w0 == w1) {
        row[w0] |= first & last;
        return;
    }
    row[w0] |= first;
    for (std::int64_t w = w0 + 1; w < w1; ++w) row[w] = ~0ull;
    row[w1] |= last;
}

}  // namespace

bool GridMask::cell(std::int64_t i, std::int64_t j) const {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return false;
    std::int64_t w = j * stride_words() + i / 64;
    return (bits[static_cast<std::size_t>(w)] >> (i % 64)) & 1u;
}

void GridMask::set_cell(std::int64_t i, std::int64_t j) {
    std::int64_t w = j * stride_words() + i / 64;
    bits[static_cast<std::size_t>(w)] |= (1ull << (i % 64));
}

void GridMask::clear_cell(std::int64_t i, std::int64_t j) {
    std::int64_t w = j * stride_words() + i / 64;
    bits[static_cast<std::size_t>(w)] &= ~(1ull << (i % 64));
}

std::int64_t GridMask::count() const {
    std::int64_t total = 0;
    for (std::uint64_t word : bits) total += std::popcount(word);
    return total;
}

double mask_area(const GridMask& mask) {
    return static_cast<double>(mask.count()) * mask.h * mask.h;
}

double rasterize_error_bound(const PolygonShape& shape, double h) {
    return 2.0 * h * perimeter(shape) + 4.0 * h * h;
}

GridMask rasterize(const PolygonShape& shape, double h, int workers) {
    validate_shape(shape);
    LatticeBox lat = snapped_lattice(bounding_box(shape), h);

    GridMask mask;
    mask.origin = lat.origin;
    mask.h = h;
    mask.nx = lat.nx;
    mask.ny = lat.ny;
    mask.bits.assign(static_cast<std::size_t>(mask.stride_words() * mask.ny), 0);

    std::vector<Segment> edges = shape_edges(shape);

    // Row stride is whole words, so concurrent rows never share a word.
    parallel_for(mask.ny, workers, [&](std::int64_t j0, std::int64_t j1) {
        std::vector<double> xs;
        for (std::int64_t j = j0; j < j1; ++j) {
            double y = mask.origin.y + (static_cast<double>(j) + 0.5) * h;
            xs.clear();
            for (const Segment& e : edges) {
                if ((e.a.y > y) == (e.b.y > y)) continue;
                xs.push_back(e.a.x + (y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y));
            }
            std::sort(xs.begin(), xs.end());
            auto center_x = [&](std::int64_t i) {
                return mask.origin.x + (static_cast<double>(i) + 0.5) * h;
            };
            for (std::size_t m = 0; m + 1 < xs.size(); m += 2) {
                // centers strictly between the crossing pair; the index
                // arithmetic is nudged afterwards so float noise in the
                // division cannot shift the span
                double xa = xs[m];
                double xb = xs[m + 1];
                std::int64_t ia =
                    static_cast<std::int64_t>(std::floor((xa - mask.origin.x) / h - 0.5)) + 1;
                std::int64_t ib =
                    static_cast<std::int64_t>(std::ceil((xb - mask.origin.x) / h - 0.5));
                while (ia > 0 && center_x(ia - 1) > xa) --ia;
                while (ia < mask.nx && center_x(ia) <= xa) ++ia;
                while (ib > 0 && center_x(ib - 1) >= xb) --ib;
                while (ib < mask.nx && center_x(ib) < xb) ++ib;
                fill_span(mask, j, std::max<std::int64_t>(ia, 0),
                          std::min<std::int64_t>(ib, mask.nx));
            }
        }
    });

    // Centers within snapping distance of an edge count as inside. Walking
    // each edge at half-cell steps visits every cell whose center can be that
    // close; the 3x3 window absorbs samples landing on cell borders.
    for (const Segment& e : edges) {
        double len = norm(e.b - e.a);
        std::int64_t steps = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                                           std::ceil(len / (0.5 * h))));
        for (std::int64_t s = 0; s <= steps; ++s) {
            double lam = static_cast<double>(s) / static_cast<double>(steps);
            Point2 p = e.a + lam * (e.b - e.a);
            std::int64_t ci = static_cast<std::int64_t>(std::floor((p.x - mask.origin.x) / h));
            std::int64_t cj = static_cast<std::int64_t>(std::floor((p.y - mask.origin.y) / h));
            for (std::int64_t j = cj - 1; j <= cj + 1; ++j) {
                for (std::int64_t i = ci - 1; i <= ci + 1; ++i) {
                    if (i < 0 || j < 0 || i >= mask.nx || j >= mask.ny) continue;
                    if (mask.cell(i, j)) continue;
                    if (dist_point_segment(mask.center(i, j), e.a, e.b) <= kSnapEps) {
                        mask.set_cell(i, j);
                    }
                }
            }
        }
    }
    return mask;
}

double mask_symdiff_area(const GridMask& a, const GridMask& b) {
    auto [di, dj] = lattice_offset(a, b);
    std::int64_t i0 = std::min<std::int64_t>(0, di);
    std::int64_t j0 = std::min<std::int64_t>(0, dj);
    std::int64_t i1 = std::max<std::int64_t>(a.nx, di + b.nx);
    std::int64_t j1 = std::max<std::int64_t>(a.ny, dj + b.ny);
    std::int64_t total = 0;
    for (std::int64_t j = j0; j < j1; ++j) {
        for (std::int64_t i = i0; i < i1; ++i) {
            if (a.cell(i, j) != cell_at(b, di, dj, i, j)) ++total;
        }
    }
    return static_cast<double>(total) * a.h * a.h;
}

PolygonShape comb_shape(int k) {
    if (k < 1) throw validation_error("comb needs at least one tooth");
    if (k > 100000) throw validation_error("comb tooth count is too large");
    double w = 0.5 / static_cast<double>(k);
    PolygonShape comb;
    for (int i = 0; i < k; ++i) {
        double x0 = static_cast<double>(2 * i) * w;
        double x1 = static_cast<double>(2 * i + 1) * w;
        Ring tooth;
        tooth.orientation = RingOrientation::ccw;
        tooth.vertices = {{x0, 0.0}, {x1, 0.0}, {x1, 1.0}, {x0, 1.0}};
        comb.rings.push_back(std::move(tooth));
    }
    return comb;
}

CombReport comb_demo(int k) {
    PolygonShape comb = comb_shape(k);
    double w = 0.5 / static_cast<double>(k);
    Point2 t{w, 0.0};

    CombReport report;
    report.k = k;
    report.shift = t;
    report.symdiff = symdiff_area(comb, translate(comb, t));
    report.perimeter = perimeter(comb);
    report.translation_rhs = norm(t) * report.perimeter;
    report.projection_quantity = norm(t) * projection_extent(convex_hull(comb), t);
    return report;
}

CoveringReport covering_check_translation(const PolygonShape& shape, Point2 t, double h,
                                          int workers) {
    validate_shape(shape);
    if (!(h > 0.0) || !std::isfinite(h)) throw validation_error("cell size must be positive");
    if (!std::isfinite(t.x) || !std::isfinite(t.y)) {
        throw validation_error("translation must be finite");
    }
    CoveringReport report;
    double tn = norm(t);
    if (tn <= kSnapEps) return report;  // empty symmetric difference

    PolygonShape moved = translate(shape, t);
    Box2 ba = bounding_box(shape);
    Box2 bb = bounding_box(moved);
    Box2 box{{std::min(ba.min.x, bb.min.x), std::min(ba.min.y, bb.min.y)},
             {std::max(ba.max.x, bb.max.x), std::max(ba.max.y, bb.max.y)}};
    LatticeBox lat = snapped_lattice(box, h);
    report.lattice_points = lat.nx * lat.ny;

    std::vector<Segment> edges = shape_edges(shape);
    double band = h * std::sqrt(2.0);
    std::int64_t lam_steps = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                                           std::ceil(2.0 * tn / h)));

    std::atomic<std::int64_t> interior{0};
    std::atomic<std::int64_t> violations{0};

    parallel_for(lat.ny, workers, [&](std::int64_t j0, std::int64_t j1) {
        for (std::int64_t j = j0; j < j1; ++j) {
            for (std::int64_t i = 0; i < lat.nx; ++i) {
                Point2 x{lat.origin.x + (static_cast<double>(i) + 0.5) * h,
                         lat.origin.y + (static_cast<double>(j) + 0.5) * h};
                if (point_in_shape(shape, x) == point_in_shape(moved, x)) continue;
                if (distance_to_boundary(shape, x) <= band) continue;
                if (distance_to_boundary(moved, x) <= band) continue;
                interior.fetch_add(1, std::memory_order_relaxed);

                // 'covered' means some sampled point x - lambda t lies within
                // the band of the boundary. The segment distance settles all
                // but a thin margin without sampling: the nearest lambda
                // sample sits at most h/4 past the closest approach.
                Segment span{x, x - t};
                double dmin = std::numeric_limits<double>::infinity();
                for (const Segment& e : edges) {
                    dmin = std::min(dmin, segment_segment_distance(span, e));
                    if (dmin <= band - 0.25 * h) break;
                }
                bool covered = dmin <= band - 0.25 * h;
                if (!covered && dmin <= band) {
                    for (std::int64_t m = 0; m <= lam_steps && !covered; ++m) {
                        double lam = static_cast<double>(m) / static_cast<double>(lam_steps);
                        covered = distance_to_boundary(shape, x - lam * t) <= band;
                    }
                }
                if (!covered) violations.fetch_add(1, std::memory_order_relaxed);
            }
        }
    });

    report.interior_points = interior.load();
    report.violations = violations.load();
    return report;
}

CoveringReport covering_check_rotation(const PolygonShape& shape, double theta, double h,
                                       int workers) {
    validate_shape(shape);
    if (!(h > 0.0) || !std::isfinite(h)) throw validation_error("cell size must be positive");
    if (!std::isfinite(theta)) throw validation_error("angle must be finite");
    CoveringReport report;
    if (std::fabs(std::sin(0.5 * theta)) < 1e-15) return report;  // identity rotation

    RigidMotion2 motion{normalize_angle(theta), {0.0, 0.0}};
    PolygonShape moved = apply_motion(shape, motion);
    Box2 ba = bounding_box(shape);
    Box2 bb = bounding_box(moved);
    Box2 box{{std::min(ba.min.x, bb.min.x), std::min(ba.min.y, bb.min.y)},
             {std::max(ba.max.x, bb.max.x), std::max(ba.max.y, bb.max.y)}};
    LatticeBox lat = snapped_lattice(box, h);
    report.lattice_points = lat.nx * lat.ny;

    // Hash every sampled point of every segment a -> Ma into h-sized buckets.
    // Boundary step h/2 and segment step h/2 leave a genuinely covered lattice
    // point within h/2 of some sample, so the 3x3 bucket window finds it.
    std::unordered_map<std::uint64_t, std::vector<Point2>> buckets;
    for (const Segment& e : shape_edges(shape)) {
        double len = norm(e.b - e.a);
        std::int64_t steps = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                                           std::ceil(len / (0.5 * h))));
        for (std::int64_t s = 0; s < steps; ++s) {
            double lam = static_cast<double>(s) / static_cast<double>(steps);
            Point2 a = e.a + lam * (e.b - e.a);
            Point2 ma = apply(motion, a);
            double chord = norm(ma - a);
            std::int64_t sub = std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                                             std::ceil(chord / (0.5 * h))));
            for (std::int64_t m = 0; m <= sub; ++m) {
                double mu = static_cast<double>(m) / static_cast<double>(sub);
                Point2 p = a + mu * (ma - a);
                std::int64_t ix = static_cast<std::int64_t>(std::floor(p.x / h));
                std::int64_t iy = static_cast<std::int64_t>(std::floor(p.y / h));
                buckets[bucket_key(ix, iy)].push_back(p);
            }
        }
    }

    double band = h * std::sqrt(2.0);
    std::atomic<std::int64_t> interior{0};
    std::atomic<std::int64_t> violations{0};

    parallel_for(lat.ny, workers, [&](std::int64_t j0, std::int64_t j1) {
        for (std::int64_t j = j0; j < j1; ++j) {
            for (std::int64_t i = 0; i < lat.nx; ++i) {
                Point2 x{lat.origin.x + (static_cast<double>(i) + 0.5) * h,
                         lat.origin.y + (static_cast<double>(j) + 0.5) * h};
                if (point_in_shape(shape, x) == point_in_shape(moved, x)) continue;
                if (distance_to_boundary(shape, x) <= band) continue;
                if (distance_to_boundary(moved, x) <= band) continue;
                interior.fetch_add(1, std::memory_order_relaxed);

                std::int64_t ix = static_cast<std::int64_t>(std::floor(x.x / h));
                std::int64_t iy = static_cast<std::int64_t>(std::floor(x.y / h));
                bool covered = false;
                for (std::int64_t dj = -1; dj <= 1 && !covered; ++dj) {
                    for (std::int64_t di = -1; di <= 1 && !covered; ++di) {
                        auto it = buckets.find(bucket_key(ix + di, iy + dj));
                        if (it == buckets.end()) continue;
                        for (const Point2& p : it->second) {
                            if (norm(p - x) <= band) {
                                covered = true;
                                break;
                            }
                        }
                    }
                }
                if (!covered) violations.fetch_add(1, std::memory_order_relaxed);
            }
        }
    });

    report.interior_points = interior.load();
    report.violations = violations.load();
    return report;
}

DifferenceReport overlap_difference_check(const GridMask& d, const GridMask& g,
                                          const GridMask& e) {
    auto [gi, gj] = lattice_offset(d, g);
    auto [ei, ej] = lattice_offset(d, e);
    double cell = d.h * d.h;

    DifferenceReport report;
    report.mu_d = mask_area(d);
    report.mu_g = mask_area(g);
    if (std::fabs(report.mu_d - report.mu_g) > cell * (1.0 + 1e-9)) {
        throw validation_error("masks must have equal measure (within one cell)");
    }

    std::int64_t i0 = std::min({std::int64_t{0}, gi, ei});
    std::int64_t j0 = std::min({std::int64_t{0}, gj, ej});
    std::int64_t i1 = std::max({d.nx, gi + g.nx, ei + e.nx});
    std::int64_t j1 = std::max({d.ny, gj + g.ny, ej + e.ny});

    std::int64_t de = 0, ge = 0, d_minus_g = 0, sym = 0;
    for (std::int64_t j = j0; j < j1; ++j) {
        for (std::int64_t i = i0; i < i1; ++i) {
            bool in_d = d.cell(i, j);
            bool in_g = cell_at(g, gi, gj, i, j);
            bool in_e = cell_at(e, ei, ej, i, j);
            if (in_d && in_e) ++de;
            if (in_g && in_e) ++ge;
            if (in_d && !in_g) ++d_minus_g;
            if (in_d != in_g) ++sym;
        }
    }
    report.mu_d_e = static_cast<double>(de) * cell;
    report.mu_g_e = static_cast<double>(ge) * cell;
    report.difference = std::fabs(report.mu_d_e - report.mu_g_e);
    report.removed = static_cast<double>(d_minus_g) * cell;
    report.half_symdiff = 0.5 * static_cast<double>(sym) * cell;
    report.within_removed = report.difference <= report.removed + cell;
    report.within_half_symdiff = report.difference <= report.half_symdiff + cell;
    return report;
}

void write_pgm(const GridMask& mask, std::ostream& out) {
    out << "P5\n" << mask.nx << " " << mask.ny << "\n255\n";
    std::vector<char> row(static_cast<std::size_t>(mask.nx));
    for (std::int64_t j = mask.ny - 1; j >= 0; --j) {
        for (std::int64_t i = 0; i < mask.nx; ++i) {
            row[static_cast<std::size_t>(i)] = mask.cell(i, j) ? char(255) : char(0);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void write_pgm(const GridMask& mask, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file: " + path);
    write_pgm(mask, out);
}

namespace {

// PGM header tokens may be separated by whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!token.empty()) break;
            continue;
        }
        token.push_back(static_cast<char>(c));
    }
    if (token.empty()) throw validation_error("truncated PGM header");
    return token;
}

std::int64_t pgm_int(std::istream& in) {
    std::string token = next_pgm_token(in);
    try {
        std::size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size() || value < 0) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw validation_error("malformed PGM header token: " + token);
    }
}

}  // namespace

GridMask read_pgm(std::istream& in, double h, Point2 origin) {
    if (!(h > 0.0) || !std::isfinite(h)) throw validation_error("cell size must be positive");
    std::string magic = next_pgm_token(in);
    if (magic != "P5" && magic != "P2") {
        throw validation_error("unsupported PGM magic: " + magic);
    }
    std::int64_t nx = pgm_int(in);
    std::int64_t ny = pgm_int(in);
    std::int64_t maxval = pgm_int(in);
    if (nx <= 0 || ny <= 0) throw validation_error("PGM dimensions must be positive");
    if (nx * ny > kMaxCells) throw resource_error("PGM exceeds the cell budget");
    if (maxval <= 0 || maxval > 255) throw validation_error("PGM maxval must be in [1, 255]");

    GridMask mask;
    mask.origin = origin;
    mask.h = h;
    mask.nx = nx;
    mask.ny = ny;
    mask.bits.assign(static_cast<std::size_t>(mask.stride_words() * ny), 0);

    if (magic == "P5") {
        std::vector<char> row(static_cast<std::size_t>(nx));
        for (std::int64_t r = 0; r < ny; ++r) {
            in.read(row.data(), static_cast<std::streamsize>(row.size()));
            if (in.gcount() != static_cast<std::streamsize>(row.size())) {
                throw validation_error("truncated PGM pixel data");
            }
            std::int64_t j = ny - 1 - r;
            for (std::int64_t i = 0; i < nx; ++i) {
                if (static_cast<unsigned char>(row[static_cast<std::size_t>(i)]) >= 128) {
                    mask.set_cell(i, j);
                }
            }
        }
    } else {
        for (std::int64_t r = 0; r < ny; ++r) {
            std::int64_t j = ny - 1 - r;
            for (std::int64_t i = 0; i < nx; ++i) {
                std::int64_t v = pgm_int(in);
                if (v > maxval) throw validation_error("PGM pixel above maxval");
                if (v >= 128) mask.set_cell(i, j);
            }
        }
    }
    return mask;
}

GridMask load_pgm(const std::string& path, double h, Point2 origin) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open mask file: " + path);
    return read_pgm(in, h, origin);
}

}  // namespace symdiff
