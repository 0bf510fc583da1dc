#include "hausmorph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hausmorph {

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Shape box(double x0, double y0, double x1, double y1) {
    PolygonWithHoles p;
    p.outer.vertices = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    return Shape{{p}};
}

}  // namespace

ShapePair generate_comb_pair(int prongs) {
    if (prongs < 2) throw GeometryError("a comb needs at least 2 prongs");
    constexpr double pitch = 1.0, width = 0.25;
    const double length = (prongs - 1) * pitch + width;

    Ring horizontal;
    auto& v = horizontal.vertices;
    v.push_back({0.0, 0.0});
    for (int i = 0; i < prongs; ++i) {
        const double y = i * pitch;
        if (i > 0) v.push_back({width, y});
        v.push_back({length, y});
        v.push_back({length, y + width});
        if (i + 1 < prongs) v.push_back({width, y + width});
    }
    v.push_back({0.0, length});

    Ring vertical;
    for (auto it = v.rbegin(); it != v.rend(); ++it) vertical.vertices.push_back({it->y, it->x});

    return {Shape{{PolygonWithHoles{horizontal, {}}}}, Shape{{PolygonWithHoles{vertical, {}}}}};
}

Ring random_star(std::mt19937_64& rng, int vertices, Point center) {
    if (vertices < 3) throw GeometryError("a star polygon needs at least 3 vertices");
    Ring ring;
    const double sector = 2.0 * std::numbers::pi / vertices;
    for (int i = 0; i < vertices; ++i) {
        const double angle = sector * (i + 0.1 + 0.8 * uniform01(rng));
        const double radius = 0.5 + 0.5 * uniform01(rng);
        ring.vertices.push_back({center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
    }
    return ring;
}

ShapePair generate_random_pair(std::uint64_t seed, int vertices) {
    std::mt19937_64 rng(seed);
    Ring a = random_star(rng, vertices);
    Ring b = random_star(rng, vertices);
    return {Shape{{PolygonWithHoles{std::move(a), {}}}}, Shape{{PolygonWithHoles{std::move(b), {}}}}};
}

ShapePair generate_squares_pair(double gap) {
    if (!(gap >= 0.0) || !std::isfinite(gap)) throw GeometryError("gap must be >= 0");
    return {box(0.0, 0.0, 1.0, 1.0), box(1.0 + gap, 0.0, 2.0 + gap, 1.0)};
}

}  // namespace hausmorph
