#pragma once

#include "symdiff/geometry.hpp"

#include <vector>

namespace symdiff {

struct CovariogramSample {
    double tx = 0.0;
    double ty = 0.0;
    double value = 0.0;
};

// g_A(t) = area((A + t) cap A)
double covariogram_value(const PolygonShape& shape, Point2 t);

// g_{A,B}(t) = area((A + t) cap B)
double cross_covariogram_value(const PolygonShape& a, const PolygonShape& b, Point2 t);

// Forward difference (g(lambda u) - g(0)) / lambda along the unit vector of u.
// Requires a convex shape (hull area equal to shape area within 1e-9 relative)
// and lambda > 0; the exact one-sided derivative is -projection_extent(A, u).
double directional_derivative(const PolygonShape& shape, Point2 u, double lambda);

// Uniform (2n+1) x (2n+1) grid of samples over [-tmax.x, tmax.x] x [-tmax.y, tmax.y].
std::vector<CovariogramSample> covariogram_grid(const PolygonShape& shape, Point2 tmax, int n);

}  // namespace symdiff
