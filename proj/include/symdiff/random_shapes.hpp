#pragma once

#include "symdiff/geometry.hpp"

#include <cstdint>

namespace symdiff {

// Deterministic 64-bit generator (splitmix-style). Not the standard library
// engine on purpose: identical streams on every platform and toolchain, so
// seeded suites check the same instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

struct StarParams {
    int min_vertices = 3;
    int max_vertices = 30;
    double center_range = 6.0;  // center drawn from [-range, range]^2
    double radius_min = 0.5;
    double radius_max = 3.5;
    double hole_chance = 0.25;
};

// Simple polygon star-shaped about a random center: vertices at jittered
// increasing angles with random radii (angle gaps stay below pi, so the
// polygon is a union of triangles around the center and never self
// intersects). Some shapes carry a small concentric hole.
PolygonShape random_star(Rng& rng, const StarParams& params);

// Star polygon in a compact window near the origin; suited to rasterization
// and covering suites where the lattice must stay small.
PolygonShape random_compact_star(Rng& rng);

// Convex 12-gon with vertices on the 30-degree angle grid and mildly
// perturbed radii. Edge normals stay well clear of the probe directions
// used by the covariogram derivative suite, which keeps the forward
// difference quotient within its advertised tolerance.
ConvexPolygon random_derivative_test_polygon(Rng& rng);

RigidMotion2 random_motion(Rng& rng, double translation_max);
Point2 random_translation(Rng& rng, double translation_max);

}  // namespace symdiff
