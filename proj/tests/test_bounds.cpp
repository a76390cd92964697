#include "symdiff/bounds.hpp"

#include "symdiff/boolean_ops.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <string>

using namespace symdiff;

namespace {

constexpr double kPi = 3.14159265358979323846;

PolygonShape box(double x0, double y0, double x1, double y1) {
    PolygonShape s;
    s.rings.push_back({{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, RingOrientation::ccw});
    return s;
}

}  // namespace

TEST_CASE("translation bound on the unit square") {
    BoundReport rep = translation_symdiff_bound(box(0, 0, 1, 1), {0.5, 0.0});
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rep.slack == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.bound_kind == "translation");
}

TEST_CASE("thin rectangle nearly attains the translation bound") {
    double eps = 1e-3;
    PolygonShape rect = box(0, 0, 1, eps);
    BoundReport rep = translation_symdiff_bound(rect, {0.0, 0.5 * eps});
    CHECK(std::abs(rep.lhs - eps) <= 1e-9);
    CHECK(rep.rhs == doctest::Approx(eps * (1.0 + eps)).epsilon(1e-12));
    CHECK(rep.lhs / rep.rhs >= 0.999);
}

TEST_CASE("dimensional constants") {
    CHECK(rotation_constant(1).value == 1.0);
    CHECK(rotation_constant(2).value == doctest::Approx(1.1547005383792515).epsilon(1e-15));
    CHECK(rotation_constant(3).value == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(rotation_constant(2).d == 2);
    CHECK_THROWS_AS(rotation_constant(0), validation_error);
}

TEST_CASE("boundary displacement under rotation") {
    // quarter-eighth turn of the unit square about its center:
    // 2 sin(pi/8) sqrt(2)/2
    double w = displacement_sup(box(0, 0, 1, 1), 0.25 * kPi, {0.5, 0.5});
    CHECK(w == doctest::Approx(0.5411961001461969).epsilon(1e-15));
    // about the origin the radius is sqrt(2)
    double w0 = displacement_sup(box(0, 0, 1, 1), 0.25 * kPi, {0.0, 0.0});
    CHECK(w0 == doctest::Approx(1.0823922002923938).epsilon(1e-15));
    CHECK(displacement_sup(box(0, 0, 1, 1), 0.0, {0.5, 0.5}) == 0.0);
}

TEST_CASE("rotation bound variants on the square") {
    PolygonShape sq = box(0, 0, 1, 1);
    BoundReport rect = rotation_symdiff_bound(sq, 0.25 * kPi, {0.5, 0.5},
                                              RotationVariant::rectifiable);
    CHECK(rect.lhs == doctest::Approx(0.3431457505076194).epsilon(1e-9));
    CHECK(rect.rhs == doctest::Approx(2.1647844005847876).epsilon(1e-12));
    CHECK(rect.slack >= 0.0);
    CHECK(rect.bound_kind == "rotation_rectifiable");

    BoundReport gen =
        rotation_symdiff_bound(sq, 0.25 * kPi, {0.5, 0.5}, RotationVariant::general);
    CHECK(gen.rhs ==
          doctest::Approx(1.1547005383792515 * 2.1647844005847876).epsilon(1e-12));
    CHECK(gen.lhs == doctest::Approx(rect.lhs).epsilon(1e-12));
    CHECK(gen.bound_kind == "rotation_general");
}

TEST_CASE("rigid motion bound") {
    PolygonShape sq = box(0, 0, 1, 1);
    RigidMotion2 r{0.25 * kPi, {0.25, -0.1}};
    BoundReport rep = rigid_motion_symdiff_bound(sq, r);
    double expected_rhs = (std::hypot(0.25, 0.1) + 1.0823922002923938) * 4.0;
    CHECK(rep.rhs == doctest::Approx(expected_rhs).epsilon(1e-12));
    CHECK(rep.slack >= 0.0);
    CHECK(rep.lhs == doctest::Approx(symdiff_area(sq, apply_motion(sq, r))).epsilon(1e-12));
    CHECK(rep.bound_kind == "rigid");
}

TEST_CASE("overlap difference bound between two motions") {
    PolygonShape sq = box(0, 0, 1, 1);
    RigidMotion2 r{0.0, {0.0, 0.0}};
    RigidMotion2 s{0.25 * kPi, {0.0, 0.0}};
    double bound = overlap_lipschitz_bound(sq, r, s);
    CHECK(bound == doctest::Approx(2.1647844005847876).epsilon(1e-12));
    // against a fixed copy of the square, the actual change obeys the bound
    double fr = overlap_value(sq, r, sq);
    double fs = overlap_value(sq, s, sq);
    CHECK(std::abs(fr - fs) <= bound + 1e-12);
    CHECK(overlap_lipschitz_bound(sq, r, r) == 0.0);
}

TEST_CASE("swept area identity") {
    ConvexPolygon sq = convex_hull(box(0, 0, 1, 1));
    CHECK(cavalieri_sweep_area(sq, {2.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cavalieri_sweep_area(sq, {1.0, 1.0}) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cavalieri_sweep_area(sq, {0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    BoundReport rep = cavalieri_report(sq, {1.0, 1.0});
    CHECK(std::abs(rep.slack) <= 1e-9);
    CHECK(rep.bound_kind == "cavalieri");
}

TEST_CASE("report serialization") {
    BoundReport rep = translation_symdiff_bound(box(0, 0, 1, 1), {0.5, 0.0});
    std::string text = bound_report_json(rep);
    auto j = nlohmann::json::parse(text);
    CHECK(j["lhs"].get<double>() == doctest::Approx(rep.lhs).epsilon(1e-15));
    CHECK(j["rhs"].get<double>() == doctest::Approx(rep.rhs).epsilon(1e-15));
    CHECK(j["slack"].get<double>() == doctest::Approx(rep.slack).epsilon(1e-15));
    CHECK(j["bound_kind"].get<std::string>() == "translation");
    CHECK(!j["inputs_digest"].get<std::string>().empty());
    // key order is pinned
    CHECK(text.find("\"lhs\"") < text.find("\"rhs\""));
    CHECK(text.find("\"rhs\"") < text.find("\"slack\""));
    CHECK(text.find("\"slack\"") < text.find("\"bound_kind\""));
    CHECK(text.find("\"bound_kind\"") < text.find("\"inputs_digest\""));
    // the digest keys the inputs
    BoundReport other = translation_symdiff_bound(box(0, 0, 1, 1), {0.25, 0.0});
    CHECK(other.inputs_digest != rep.inputs_digest);
    BoundReport same = translation_symdiff_bound(box(0, 0, 1, 1), {0.5, 0.0});
    CHECK(same.inputs_digest == rep.inputs_digest);
}

TEST_CASE("bounds reject invalid shapes") {
    PolygonShape bow;
    bow.rings.push_back({{{0, 0}, {1, 1}, {1, 0}, {0, 1}}, RingOrientation::ccw});
    CHECK_THROWS_AS(translation_symdiff_bound(bow, {1.0, 0.0}), validation_error);
    CHECK_THROWS_AS(
        rotation_symdiff_bound(bow, 0.1, {0.0, 0.0}, RotationVariant::general),
        validation_error);
    CHECK_THROWS_AS(rigid_motion_symdiff_bound(bow, {0.1, {0.0, 0.0}}), validation_error);
}
