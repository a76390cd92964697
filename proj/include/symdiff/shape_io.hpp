#pragma once

#include "symdiff/geometry.hpp"

#include <string>

namespace symdiff {

// Shape files are JSON objects of the form
//   {"rings": [[[x, y], ...], ...]}
// with outer rings in counterclockwise order and holes clockwise.
// Both syntax errors and ring invariant violations are reported as
// validation_error with a "name:line:column: message" prefix.
PolygonShape parse_shape(const std::string& text, const std::string& name = "<input>");
PolygonShape load_shape(const std::string& path);

std::string write_shape(const PolygonShape& shape);

}  // namespace symdiff
