#pragma once

#include "symdiff/geometry.hpp"

#include <optional>
#include <string>

namespace symdiff {

struct RenderOptions {
    std::optional<RigidMotion2> motion;
    // When positive and a motion is present, draws this many chords from
    // boundary sample points to their images.
    int segments = 0;
    double width = 640.0;  // pixel size of the longer image side
};

// Deterministic standalone SVG: the shape, its moved copy, the symmetric
// difference shaded via even-odd fill over both boundaries, and optional
// displacement chords. Identical inputs produce identical bytes.
std::string render_svg(const PolygonShape& shape, const RenderOptions& options);

}  // namespace symdiff
