#include "hausmorph/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace hausmorph {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

}  // namespace

const std::string& RenderOptions::fill(Method m) const {
    switch (m) {
        case Method::dilation: return dilation_fill;
        case Method::voronoi: return voronoi_fill;
        case Method::mixed: return mixed_fill;
    }
    return voronoi_fill;
}

void check(const RenderOptions& options) {
    if (!(options.width > 0.0) || !(options.height > 0.0)) throw GeometryError("canvas dimensions must be positive");
    if (!(options.margin >= 0.0)) throw GeometryError("margin must be >= 0");
    for (std::size_t i = 0; i < options.frames.size(); ++i) {
        const double a = options.frames[i];
        if (!(a >= 0.0 && a <= 1.0)) throw GeometryError("frame alpha values must lie in [0, 1]");
        if (i > 0 && !(a > options.frames[i - 1])) throw GeometryError("frame alpha values must be strictly increasing");
    }
}

Box shared_view(const std::vector<const Shape*>& shapes, double margin) {
    bool any = false;
    Box box;
    for (const Shape* s : shapes) {
        if (!s || s->empty()) continue;
        if (!any) {
            box = s->bounds();
            any = true;
        } else {
            box.expand(s->bounds());
        }
    }
    if (!any) return Box{{0.0, 0.0}, {1.0, 1.0}};
    const double extent = std::max({box.max.x - box.min.x, box.max.y - box.min.y, 1e-9});
    return box.inflated(margin * extent);
}

std::string render_svg(const Shape& shape, const Box& view, const RenderOptions& options, const std::string& fill) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    const double w = view.max.x - view.min.x, h = view.max.y - view.min.y;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(options.width) + "\" height=\"" +
           num(options.height) + "\" viewBox=\"" + num(view.min.x) + ' ' + num(-view.max.y) + ' ' + num(w) + ' ' +
           num(h) + "\">\n";
    for (const auto& poly : shape.polygons) {
        std::string d;
        auto ring = [&](const Ring& r) {
            for (std::size_t i = 0; i < r.vertices.size(); ++i) {
                d += i == 0 ? "M" : " L";
                d += num(r.vertices[i].x) + ' ' + num(-r.vertices[i].y);
            }
            d += " Z ";
        };
        ring(poly.outer);
        for (const auto& hole : poly.holes) ring(hole);
        d.pop_back();
        out += "  <path fill=\"" + fill + "\" fill-rule=\"evenodd\" stroke=\"none\" d=\"" + d + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hausmorph
