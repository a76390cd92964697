#include "symdiff/covariogram.hpp"

#include "symdiff/boolean_ops.hpp"

#include <cmath>

namespace symdiff {

double covariogram_value(const PolygonShape& shape, Point2 t) {
    validate_shape(shape);
    return intersection_area(translate(shape, t), shape);
}

double cross_covariogram_value(const PolygonShape& a, const PolygonShape& b, Point2 t) {
    validate_shape(a);
    validate_shape(b);
    return intersection_area(translate(a, t), b);
}

double directional_derivative(const PolygonShape& shape, Point2 u, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw validation_error("lambda must be positive and finite");
    }
    double len = norm(u);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw validation_error("direction must be nonzero and finite");
    }
    double a = area(shape);
    double hull_area = area(convex_hull(shape));
    if (hull_area - a > 1e-9 * hull_area) {
        throw validation_error("directional derivative requires a convex shape");
    }
    Point2 step{lambda * u.x / len, lambda * u.y / len};
    return (covariogram_value(shape, step) - a) / lambda;
}

std::vector<CovariogramSample> covariogram_grid(const PolygonShape& shape, Point2 tmax, int n) {
    if (n < 0) throw validation_error("grid half-width must be nonnegative");
    std::vector<CovariogramSample> out;
    out.reserve(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
    for (int j = -n; j <= n; ++j) {
        for (int i = -n; i <= n; ++i) {
            Point2 t{n == 0 ? 0.0 : tmax.x * i / n, n == 0 ? 0.0 : tmax.y * j / n};
            out.push_back({t.x, t.y, covariogram_value(shape, t)});
        }
    }
    return out;
}

}  // namespace symdiff
