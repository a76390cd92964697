#include "symdiff/covariogram.hpp"

#include <doctest.h>

#include <cmath>

using namespace symdiff;

namespace {

PolygonShape box(double x0, double y0, double x1, double y1) {
    PolygonShape s;
    s.rings.push_back({{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, RingOrientation::ccw});
    return s;
}

}  // namespace

TEST_CASE("unit square covariogram values") {
    PolygonShape sq = box(0, 0, 1, 1);
    CHECK(covariogram_value(sq, {0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(covariogram_value(sq, {0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(covariogram_value(sq, {-0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(covariogram_value(sq, {0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(covariogram_value(sq, {1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(covariogram_value(sq, {2.0, 0.0}) == 0.0);
}

TEST_CASE("cross covariogram between separated squares") {
    PolygonShape a = box(0, 0, 1, 1);
    PolygonShape b = box(2, 0, 3, 1);
    CHECK(cross_covariogram_value(a, b, {2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cross_covariogram_value(a, b, {0.0, 0.0}) == 0.0);
    CHECK(cross_covariogram_value(a, b, {1.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("derivative of the square covariogram is exactly -1 along x") {
    PolygonShape sq = box(0, 0, 1, 1);
    // g(lambda, 0) = 1 - lambda, so every forward quotient equals -1
    CHECK(directional_derivative(sq, {1.0, 0.0}, 0.25) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(directional_derivative(sq, {1.0, 0.0}, 1e-4) - (-1.0)) <= 1e-9);
    CHECK(std::abs(directional_derivative(sq, {0.0, 1.0}, 1e-4) - (-1.0)) <= 1e-9);
    // diagonal direction: the shadow across (1,1)/sqrt(2) has extent sqrt(2)
    double q = directional_derivative(sq, {1.0, 1.0}, 1e-6);
    CHECK(q == doctest::Approx(-1.4142135623730951).epsilon(1e-5));
}

TEST_CASE("derivative input validation") {
    PolygonShape sq = box(0, 0, 1, 1);
    CHECK_THROWS_AS(directional_derivative(sq, {1.0, 0.0}, 0.0), validation_error);
    CHECK_THROWS_AS(directional_derivative(sq, {1.0, 0.0}, -1.0), validation_error);
    CHECK_THROWS_AS(directional_derivative(sq, {0.0, 0.0}, 1e-4), validation_error);
    PolygonShape ell;
    ell.rings.push_back(
        {{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, RingOrientation::ccw});
    CHECK_THROWS_AS(directional_derivative(ell, {1.0, 0.0}, 1e-4), validation_error);
}

TEST_CASE("covariogram grid layout") {
    PolygonShape sq = box(0, 0, 1, 1);
    auto grid = covariogram_grid(sq, {1.0, 1.0}, 1);
    REQUIRE(grid.size() == 9);
    // rows scan ty, columns scan tx, both from -tmax to +tmax
    CHECK(grid[0].tx == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(grid[0].ty == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(grid[0].value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(grid[4].tx == 0.0);
    CHECK(grid[4].ty == 0.0);
    CHECK(grid[4].value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(grid[8].tx == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(grid[8].ty == doctest::Approx(1.0).epsilon(1e-15));
    // evenness pairs opposite corners
    CHECK(grid[0].value == doctest::Approx(grid[8].value).epsilon(1e-12));
    CHECK(grid[1].value == doctest::Approx(grid[7].value).epsilon(1e-12));

    auto single = covariogram_grid(sq, {5.0, 5.0}, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].tx == 0.0);
    CHECK(single[0].value == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(covariogram_grid(sq, {1.0, 1.0}, -1), validation_error);
}
