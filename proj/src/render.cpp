#include "symdiff/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace symdiff {

namespace {

struct Frame {
    double scale = 1.0;
    double min_x = 0.0;
    double max_y = 0.0;
    double pad = 0.0;

    double px(double x) const { return (x - min_x) * scale + pad; }
    double py(double y) const { return (max_y - y) * scale + pad; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    // normalize the sign of zero so identical inputs give identical bytes
    if (std::string(buf) == "-0.0000") return "0.0000";
    return buf;
}

void append_ring_path(std::string& d, const Ring& ring, const Frame& f) {
    for (std::size_t i = 0; i < ring.vertices.size(); ++i) {
        Point2 v = ring.vertices[i];
        d += (i == 0 ? "M " : "L ");
        d += fmt(f.px(v.x));
        d += ' ';
        d += fmt(f.py(v.y));
        d += ' ';
    }
    d += "Z ";
}

std::string shape_path(const PolygonShape& shape, const Frame& f) {
    std::string d;
    for (const Ring& ring : shape.rings) append_ring_path(d, ring, f);
    if (!d.empty() && d.back() == ' ') d.pop_back();
    return d;
}

}  // namespace

std::string render_svg(const PolygonShape& shape, const RenderOptions& options) {
    validate_shape(shape);
    std::optional<PolygonShape> moved;
    if (options.motion) moved = apply_motion(shape, *options.motion);

    Box2 box = bounding_box(shape);
    if (moved) {
        Box2 mb = bounding_box(*moved);
        box.min.x = std::min(box.min.x, mb.min.x);
        box.min.y = std::min(box.min.y, mb.min.y);
        box.max.x = std::max(box.max.x, mb.max.x);
        box.max.y = std::max(box.max.y, mb.max.y);
    }
    double span = std::max({box.max.x - box.min.x, box.max.y - box.min.y, 1e-9});
    Frame f;
    f.pad = 0.05 * options.width;
    f.scale = (options.width - 2.0 * f.pad) / span;
    f.min_x = box.min.x;
    f.max_y = box.max.y;
    double width = (box.max.x - box.min.x) * f.scale + 2.0 * f.pad;
    double height = (box.max.y - box.min.y) * f.scale + 2.0 * f.pad;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
        << fmt(height) << "\">\n";

    if (moved) {
        // Even-odd fill over both boundaries shades exactly the region
        // covered by one shape and not the other.
        svg << "  <path fill=\"#d9d9d9\" fill-rule=\"evenodd\" stroke=\"none\" d=\""
            << shape_path(shape, f) << ' ' << shape_path(*moved, f) << "\"/>\n";
    } else {
        svg << "  <path fill=\"#c6dbef\" fill-rule=\"evenodd\" stroke=\"none\" d=\""
            << shape_path(shape, f) << "\"/>\n";
    }

    if (moved && options.segments > 0) {
        svg << "  <g stroke=\"#bdbdbd\" stroke-width=\"1\">\n";
        std::vector<Point2> samples =
            sample_boundary(shape, static_cast<std::size_t>(options.segments));
        for (Point2 a : samples) {
            Point2 b = apply(*options.motion, a);
            svg << "    <line x1=\"" << fmt(f.px(a.x)) << "\" y1=\"" << fmt(f.py(a.y))
                << "\" x2=\"" << fmt(f.px(b.x)) << "\" y2=\"" << fmt(f.py(b.y)) << "\"/>\n";
        }
        svg << "  </g>\n";
    }

    svg << "  <path fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" d=\""
        << shape_path(shape, f) << "\"/>\n";
    if (moved) {
        svg << "  <path fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" d=\""
            << shape_path(*moved, f) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace symdiff
