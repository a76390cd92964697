#include "symdiff/grid_oracle.hpp"

#include "symdiff/boolean_ops.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

using namespace symdiff;

namespace {

PolygonShape box(double x0, double y0, double x1, double y1) {
    PolygonShape s;
    s.rings.push_back({{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, RingOrientation::ccw});
    return s;
}

GridMask blank_mask(double h, Point2 origin, std::int64_t nx, std::int64_t ny) {
    GridMask m;
    m.h = h;
    m.origin = origin;
    m.nx = nx;
    m.ny = ny;
    m.bits.assign(static_cast<std::size_t>(m.stride_words() * ny), 0);
    return m;
}

}  // namespace

TEST_CASE("rasterized unit square counts exactly the interior centers") {
    PolygonShape sq = box(0, 0, 1, 1);

    GridMask quarter = rasterize(sq, 0.25);
    CHECK(quarter.count() == 16);
    CHECK(mask_area(quarter) == doctest::Approx(1.0).epsilon(1e-15));
    // the window pads by one cell on each side
    CHECK(quarter.origin.x == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(quarter.origin.y == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(quarter.nx == 7);
    CHECK(quarter.cell(1, 1));
    CHECK_FALSE(quarter.cell(0, 1));

    GridMask coarse = rasterize(sq, 0.3);
    CHECK(coarse.count() == 9);
    CHECK(mask_area(coarse) == doctest::Approx(0.81).epsilon(1e-12));

    CHECK(mask_area(quarter) <= 1.0 + rasterize_error_bound(sq, 0.25));
    CHECK(mask_area(quarter) >= 1.0 - rasterize_error_bound(sq, 0.25));
}

TEST_CASE("rasterize rejects bad cell sizes") {
    PolygonShape sq = box(0, 0, 1, 1);
    CHECK_THROWS_AS(rasterize(sq, 0.0), validation_error);
    CHECK_THROWS_AS(rasterize(sq, -0.1), validation_error);
    CHECK_THROWS_AS(rasterize(sq, 1e-6), resource_error);
}

TEST_CASE("mask cells outside the window read as empty") {
    GridMask m = blank_mask(0.5, {0, 0}, 4, 3);
    CHECK_FALSE(m.cell(-1, 0));
    CHECK_FALSE(m.cell(0, -1));
    CHECK_FALSE(m.cell(4, 0));
    CHECK_FALSE(m.cell(0, 3));
    m.set_cell(2, 1);
    CHECK(m.cell(2, 1));
    CHECK(m.count() == 1);
    m.clear_cell(2, 1);
    CHECK_FALSE(m.cell(2, 1));
    CHECK(m.count() == 0);
}

TEST_CASE("mask symmetric difference on a shared lattice") {
    GridMask a = rasterize(box(0, 0, 1, 1), 0.25);
    GridMask b = rasterize(box(0.5, 0, 1.5, 1), 0.25);
    CHECK(mask_symdiff_area(a, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mask_symdiff_area(a, a) == 0.0);
}

TEST_CASE("masks off the common lattice are rejected") {
    GridMask a = blank_mask(0.25, {0, 0}, 4, 4);
    GridMask b = blank_mask(0.2, {0, 0}, 4, 4);
    CHECK_THROWS_AS(mask_symdiff_area(a, b), validation_error);
    GridMask c = blank_mask(0.25, {0.1, 0}, 4, 4);
    CHECK_THROWS_AS(mask_symdiff_area(a, c), validation_error);
    GridMask d = blank_mask(0.25, {0.5, -0.25}, 4, 4);
    CHECK_NOTHROW(mask_symdiff_area(a, d));
}

TEST_CASE("comb geometry") {
    PolygonShape one = comb_shape(1);
    CHECK(area(one) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(perimeter(one) == doctest::Approx(3.0).epsilon(1e-15));

    PolygonShape fifty = comb_shape(50);
    CHECK(fifty.rings.size() == 50);
    CHECK(area(fifty) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(perimeter(fifty) == doctest::Approx(101.0).epsilon(1e-12));

    CHECK_THROWS_AS(comb_shape(0), validation_error);
    CHECK_THROWS_AS(comb_shape(100001), validation_error);
}

TEST_CASE("comb shift report") {
    CombReport r1 = comb_demo(1);
    CHECK(r1.symdiff == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.translation_rhs == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(r1.projection_quantity == doctest::Approx(0.5).epsilon(1e-12));

    CombReport r2 = comb_demo(2);
    CHECK(r2.symdiff == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2.translation_rhs == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(r2.projection_quantity == doctest::Approx(0.25).epsilon(1e-12));

    // denser teeth leave the mismatch at full measure while the projection
    // quantity collapses
    CombReport r50 = comb_demo(50);
    CHECK(r50.symdiff == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r50.translation_rhs == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(r50.projection_quantity == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(r50.perimeter == doctest::Approx(101.0).epsilon(1e-12));
    CHECK(r50.projection_quantity < r50.symdiff);
    CHECK(r50.translation_rhs >= r50.symdiff);
}

TEST_CASE("translated boundary segments cover the mismatch region") {
    PolygonShape sq = box(0, 0, 1, 1);
    CoveringReport r = covering_check_translation(sq, {0.25, 0.0}, 0.05);
    CHECK(r.violations == 0);
    CHECK(r.interior_points > 0);
    CHECK(r.lattice_points > 0);

    CoveringReport zero = covering_check_translation(sq, {0.0, 0.0}, 0.05);
    CHECK(zero.violations == 0);
    CHECK(zero.interior_points == 0);
    CHECK(zero.lattice_points == 0);

    CHECK_THROWS_AS(covering_check_translation(sq, {0.25, 0.0}, 0.0), validation_error);
}

TEST_CASE("rotated boundary arcs cover the mismatch region") {
    PolygonShape centered = box(-0.5, -0.5, 0.5, 0.5);
    // a quarter turn maps the square onto itself: nothing to cover
    CoveringReport same = covering_check_rotation(centered, 3.14159265358979323846 / 2, 0.05);
    CHECK(same.violations == 0);
    CHECK(same.interior_points == 0);

    CoveringReport r = covering_check_rotation(centered, 0.5, 0.02);
    CHECK(r.violations == 0);
    CHECK(r.interior_points > 0);
}

TEST_CASE("equal measure masks bound the overlap difference") {
    double h = 0.05;
    GridMask d = rasterize(box(0, 0, 1, 1), h);
    GridMask g = rasterize(box(1, 0, 2, 1), h);
    GridMask e = rasterize(box(0.5, 0, 1.5, 1), h);
    DifferenceReport r = overlap_difference_check(d, g, e);
    CHECK(r.mu_d == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.mu_g == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.mu_d_e == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.mu_g_e == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.difference == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.removed == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.half_symdiff == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.within_removed);
    CHECK(r.within_half_symdiff);

    GridMask small = rasterize(box(0, 0, 0.5, 1), h);
    CHECK_THROWS_AS(overlap_difference_check(d, small, e), validation_error);
}

TEST_CASE("binary PGM round trip") {
    GridMask m = rasterize(box(0, 0, 1, 1), 0.25);
    std::ostringstream out;
    write_pgm(m, out);
    std::string text = out.str();
    CHECK(text.substr(0, 3) == "P5\n");
    CHECK(text.find("7 7\n255\n") != std::string::npos);

    std::istringstream in(text);
    GridMask back = read_pgm(in, m.h, m.origin);
    CHECK(back.nx == m.nx);
    CHECK(back.ny == m.ny);
    CHECK(back.count() == m.count());
    CHECK(mask_symdiff_area(m, back) == 0.0);
}

TEST_CASE("ascii PGM with comments and thresholding") {
    std::string text =
        "P2 # plain text variant\n"
        "2 2\n"
        "# pixel block\n"
        "255\n"
        "255 0\n"
        "127 128\n";
    std::istringstream in(text);
    GridMask m = read_pgm(in, 0.5, {0, 0});
    CHECK(m.nx == 2);
    CHECK(m.ny == 2);
    // first pixel row is the top of the image
    CHECK(m.cell(0, 1));
    CHECK_FALSE(m.cell(1, 1));
    CHECK_FALSE(m.cell(0, 0));
    CHECK(m.cell(1, 0));
}

TEST_CASE("malformed PGM inputs are rejected") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_pgm(in, 0.5, {0, 0});
    };
    CHECK_THROWS_AS(parse("P3\n2 2\n255\n0 0 0 0"), validation_error);
    CHECK_THROWS_AS(parse("P2\n2 2\n999\n0 0 0 0"), validation_error);
    CHECK_THROWS_AS(parse("P2\n2 2\n255\n0 0 300 0"), validation_error);
    CHECK_THROWS_AS(parse("P2\n2 2\n255\n0 0"), validation_error);
    CHECK_THROWS_AS(parse("P2\n0 2\n255\n"), validation_error);
    CHECK_THROWS_AS(parse("P5\n2 2\n255\nab"), validation_error);
    std::istringstream in("P2\n2 2\n255\n0 0 0 0");
    CHECK_THROWS_AS(read_pgm(in, -1.0, {0, 0}), validation_error);
}

TEST_CASE("mask and clipping agree on an overlap") {
    PolygonShape a = box(0, 0, 1, 1);
    PolygonShape b = box(0.25, 0.25, 1.25, 1.25);
    double h = 0.01;
    double sd_masks = mask_symdiff_area(rasterize(a, h), rasterize(b, h));
    double sd_clip = symdiff_area(a, b);
    double tol = 2.0 * h * (perimeter(a) + perimeter(b)) + 8.0 * h * h;
    CHECK(std::fabs(sd_masks - sd_clip) <= tol);
}
