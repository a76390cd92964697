#include "symdiff/geometry.hpp"

#include <doctest.h>

#include <cmath>

using namespace symdiff;

namespace {

constexpr double kPi = 3.14159265358979323846;

Ring ccw_ring(std::vector<Point2> vs) { return {std::move(vs), RingOrientation::ccw}; }
Ring cw_ring(std::vector<Point2> vs) { return {std::move(vs), RingOrientation::cw}; }

PolygonShape unit_square() {
    PolygonShape s;
    s.rings.push_back(ccw_ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    return s;
}

PolygonShape square_with_hole() {
    PolygonShape s;
    s.rings.push_back(ccw_ring({{0, 0}, {3, 0}, {3, 3}, {0, 3}}));
    s.rings.push_back(cw_ring({{1, 1}, {1, 2}, {2, 2}, {2, 1}}));
    return s;
}

}  // namespace

TEST_CASE("ring area and perimeter") {
    std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(signed_ring_area(sq) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<Point2> rev(sq.rbegin(), sq.rend());
    CHECK(signed_ring_area(rev) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(ring_perimeter(sq) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("shape area subtracts holes") {
    PolygonShape s = square_with_hole();
    CHECK(area(s) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(perimeter(s) == doctest::Approx(16.0).epsilon(1e-15));
    CHECK_NOTHROW(validate_shape(s));
}

TEST_CASE("centroid") {
    CHECK(centroid(unit_square()).x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(centroid(unit_square()).y == doctest::Approx(0.5).epsilon(1e-15));
    // the hole is concentric, so the centroid stays at the center
    Point2 c = centroid(square_with_hole());
    CHECK(c.x == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("bounding box") {
    Box2 box = bounding_box(square_with_hole());
    CHECK(box.min.x == 0.0);
    CHECK(box.min.y == 0.0);
    CHECK(box.max.x == 3.0);
    CHECK(box.max.y == 3.0);
}

TEST_CASE("validation rejects malformed rings") {
    PolygonShape two;
    two.rings.push_back(ccw_ring({{0, 0}, {1, 0}}));
    CHECK_THROWS_AS(validate_shape(two), validation_error);

    PolygonShape dup;
    dup.rings.push_back(ccw_ring({{0, 0}, {1, 0}, {1, 0}, {0, 1}}));
    CHECK_THROWS_AS(validate_shape(dup), validation_error);

    PolygonShape bow;
    bow.rings.push_back(ccw_ring({{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
    CHECK_THROWS_AS(validate_shape(bow), validation_error);

    PolygonShape wrong_flag;
    wrong_flag.rings.push_back(cw_ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK_THROWS_AS(validate_shape(wrong_flag), validation_error);

    PolygonShape nan_shape;
    double nan = std::nan("");
    nan_shape.rings.push_back(ccw_ring({{0, 0}, {1, 0}, {nan, 1}}));
    CHECK_THROWS_AS(validate_shape(nan_shape), validation_error);

    PolygonShape hole_outside = unit_square();
    hole_outside.rings.push_back(cw_ring({{5, 5}, {5, 6}, {6, 6}, {6, 5}}));
    CHECK_THROWS_AS(validate_shape(hole_outside), validation_error);

    PolygonShape empty;
    CHECK_THROWS_AS(validate_shape(empty), validation_error);
}

TEST_CASE("angle normalization") {
    CHECK(normalize_angle(0.0) == 0.0);
    CHECK(normalize_angle(2.0 * kPi) == 0.0);
    CHECK(normalize_angle(-0.5 * kPi) == doctest::Approx(1.5 * kPi).epsilon(1e-15));
    CHECK(normalize_angle(7.0 * kPi) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(normalize_angle(normalize_angle(123.456)) == normalize_angle(123.456));
}

TEST_CASE("motion composition oracle") {
    RigidMotion2 r{0.5 * kPi, {1.0, 0.0}};
    RigidMotion2 s{0.5 * kPi, {0.0, 0.0}};
    RigidMotion2 rs = compose(r, s);
    CHECK(rs.theta == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(rs.t.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rs.t.y == doctest::Approx(0.0).epsilon(1e-15));
    // spot check on a point: (1,0) -> s -> (0,1) -> r -> (0,0)
    Point2 image = apply(rs, {1.0, 0.0});
    CHECK(image.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(image.y == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("inverse motion") {
    RigidMotion2 r{1.2345, {0.3, -2.7}};
    Point2 p{4.0, -1.5};
    Point2 back = apply(invert(r), apply(r, p));
    CHECK(dist(back, p) <= 1e-14);
    RigidMotion2 id = compose(r, invert(r));
    CHECK(dist(apply(id, p), p) <= 1e-14);
}

TEST_CASE("rotation about a pivot") {
    RigidMotion2 r = rotation_about(0.5 * kPi, {1.0, 1.0});
    Point2 image = apply(r, {2.0, 1.0});
    CHECK(image.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(image.y == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(dist(apply(r, {1.0, 1.0}), {1.0, 1.0}) <= 1e-15);
}

TEST_CASE("projection extent is measured across the direction") {
    ConvexPolygon sq = convex_hull(unit_square());
    CHECK(projection_extent(sq, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(projection_extent(sq, {0.0, 3.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(projection_extent(sq, {1.0, 1.0}) ==
          doctest::Approx(1.4142135623730951).epsilon(1e-15));
    // regular hexagon with circumradius 1
    std::vector<Point2> hex;
    for (int k = 0; k < 6; ++k) {
        double a = kPi * k / 3.0;
        hex.push_back({std::cos(a), std::sin(a)});
    }
    ConvexPolygon h = convex_hull(hex);
    CHECK(projection_extent(h, {1.0, 0.0}) ==
          doctest::Approx(1.7320508075688772).epsilon(1e-14));
    CHECK(projection_extent(h, {0.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(projection_extent(h, {0.0, 0.0}), validation_error);
}

TEST_CASE("convex hull drops interior points") {
    ConvexPolygon hull = convex_hull(std::vector<Point2>{
        {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.2, 0.7}});
    CHECK(hull.vertices.size() == 4);
    CHECK(area(hull) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(convex_hull(std::vector<Point2>{{0, 0}, {1, 1}, {2, 2}}),
                    validation_error);
}

TEST_CASE("max radius") {
    CHECK(max_radius(unit_square(), {0.0, 0.0}) ==
          doctest::Approx(1.4142135623730951).epsilon(1e-15));
    CHECK(max_radius(unit_square(), {0.5, 0.5}) ==
          doctest::Approx(0.7071067811865476).epsilon(1e-15));
}

TEST_CASE("point membership with holes") {
    PolygonShape s = square_with_hole();
    CHECK(point_in_shape(s, {0.5, 0.5}));
    CHECK(!point_in_shape(s, {1.5, 1.5}));          // inside the hole
    CHECK(!point_in_shape(s, {4.0, 0.5}));          // outside
    CHECK(point_in_shape(s, {3.0, 1.5}));           // on the outer boundary
    CHECK(point_in_shape(s, {1.0, 1.5}));           // on the hole boundary
    CHECK(!point_in_shape(s, {3.0 + 1e-6, 1.5}, 0.0));
}

TEST_CASE("distance to boundary and segments") {
    CHECK(dist_point_segment({0, 1}, {0, 0}, {2, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dist_point_segment({3, 0}, {0, 0}, {2, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dist_point_segment({1, 0}, {1, 0}, {1, 0}) == 0.0);
    CHECK(distance_to_boundary(unit_square(), {0.5, 0.5}) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(distance_to_boundary(unit_square(), {2.0, 0.5}) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("boundary sampling") {
    auto pts = sample_boundary(unit_square(), 8);
    CHECK(pts.size() == 8);
    // arclength steps of 0.5 starting at the first vertex
    CHECK(pts[0].x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pts[1].x == doctest::Approx(0.5).epsilon(1e-15));
    for (Point2 p : pts) {
        CHECK(distance_to_boundary(unit_square(), p) <= 1e-12);
    }
    CHECK(sample_boundary(unit_square(), 0).empty());
}

TEST_CASE("hull round trip through a shape") {
    ConvexPolygon hull = convex_hull(unit_square());
    PolygonShape s = to_shape(hull);
    CHECK(area(s) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_NOTHROW(validate_shape(s));
}
