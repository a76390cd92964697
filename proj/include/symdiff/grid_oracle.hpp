#pragma once

#include "symdiff/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace symdiff {

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Boolean raster on a square lattice. origin is snapped to integer multiples
// of h, so masks built independently at the same cell size share a lattice.
// Cell (i, j) covers [origin.x + i h, origin.x + (i+1) h) x [...j...), and is
// set when the cell center lies inside the rasterized shape.
struct GridMask {
    Point2 origin{0.0, 0.0};
    double h = 0.0;
    std::int64_t nx = 0;
    std::int64_t ny = 0;
    std::vector<std::uint64_t> bits;  // row stride padded to whole words

    std::int64_t stride_words() const { return (nx + 63) / 64; }
    bool cell(std::int64_t i, std::int64_t j) const;
    void set_cell(std::int64_t i, std::int64_t j);
    void clear_cell(std::int64_t i, std::int64_t j);
    std::int64_t count() const;
    Point2 center(std::int64_t i, std::int64_t j) const {
        return {origin.x + (i + 0.5) * h, origin.y + (j + 0.5) * h};
    }
};

double mask_area(const GridMask& mask);

// Cell-center even-odd rasterization; centers within kSnapEps of an edge
// count as inside. |mask_area - area(shape)| <= 2 h perimeter + 4 h^2.
// Throws resource_error above 1e8 cells.
GridMask rasterize(const PolygonShape& shape, double h, int workers = 1);

double rasterize_error_bound(const PolygonShape& shape, double h);

// Area of the exact-one set of two masks on congruent lattices (equal h within
// 1e-12 relative, origins differing by integer multiples of h within 1e-12).
double mask_symdiff_area(const GridMask& a, const GridMask& b);

// Free-standing comb teeth: k rectangles of width 1/(2k) and height 1 with
// gaps of the same width, so a shift by one tooth width swaps teeth and gaps.
PolygonShape comb_shape(int k);

struct CombReport {
    int k = 0;
    Point2 shift{0.0, 0.0};
    double symdiff = 0.0;
    double projection_quantity = 0.0;  // |t| * projection_extent(hull, t)
    double translation_rhs = 0.0;      // |t| * perimeter
    double perimeter = 0.0;
};

// Translates the comb by one tooth width and reports the exact symmetric
// difference next to the projection-style quantity it defeats.
CombReport comb_demo(int k);

struct CoveringReport {
    std::int64_t lattice_points = 0;
    std::int64_t interior_points = 0;  // strictly inside the symmetric difference
    std::int64_t violations = 0;
};

// Checks that every lattice point strictly inside symdiff(A, A + t) (margin
// h*sqrt(2) from both boundaries) is covered by a segment from a boundary
// point to its translate: some lambda sample in [0, 1] at resolution h/(2|t|)
// brings x - lambda t within h*sqrt(2) of the boundary of A.
CoveringReport covering_check_translation(const PolygonShape& shape, Point2 t, double h,
                                          int workers = 1);

// Rotation analogue about the origin: boundary points a sampled at arclength
// step h/2, segments from a to Ma sampled finer than h/2, covered when a
// sampled segment point lies within h*sqrt(2) of the lattice point.
CoveringReport covering_check_rotation(const PolygonShape& shape, double theta, double h,
                                       int workers = 1);

struct DifferenceReport {
    double mu_d = 0.0;
    double mu_g = 0.0;
    double mu_d_e = 0.0;
    double mu_g_e = 0.0;
    double difference = 0.0;     // |mu(D cap E) - mu(G cap E)|
    double removed = 0.0;        // mu(D \ G)
    double half_symdiff = 0.0;   // mu(D sym G) / 2
    bool within_removed = false;
    bool within_half_symdiff = false;
};

// For equal-measure masks D and G (within one cell), the intersection measures
// against any E differ by at most mu(D \ G) = half the symmetric difference.
DifferenceReport overlap_difference_check(const GridMask& d, const GridMask& g,
                                          const GridMask& e);

void write_pgm(const GridMask& mask, std::ostream& out);
void write_pgm(const GridMask& mask, const std::string& path);

// Reads P5/P2 PGM (maxval <= 255); bytes >= 128 become set cells. h and
// origin place the bitmap on a lattice for oracle-only experiments.
GridMask read_pgm(std::istream& in, double h, Point2 origin = {0.0, 0.0});
GridMask load_pgm(const std::string& path, double h, Point2 origin = {0.0, 0.0});

}  // namespace symdiff
