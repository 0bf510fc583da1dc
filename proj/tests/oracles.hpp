#pragma once

// Brute-force reference computations for tests. Deliberately naive and
// independent of the library's kernels: plain loops over ring edges,
// rasters and flood fills.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "hausmorph/shape.hpp"

namespace hausmorph::oracle {

template <class F>
void for_each_edge(const Shape& s, F f) {
    for (const auto& poly : s.polygons) {
        auto ring = [&](const Ring& r) {
            for (std::size_t i = 0; i < r.vertices.size(); ++i) f(r.vertices[i], r.vertices[(i + 1) % r.vertices.size()]);
        };
        ring(poly.outer);
        for (const auto& h : poly.holes) ring(h);
    }
}

inline bool inside(const Shape& s, Point p) {
    bool in = false;
    for_each_edge(s, [&](Point a, Point b) {
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x > p.x) in = !in;
        }
    });
    return in;
}

inline Point nearest_on_segment(Point p, Point a, Point b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return {a.x + t * dx, a.y + t * dy};
}

inline Point nearest_on_boundary(const Shape& s, Point p) {
    double best = std::numeric_limits<double>::infinity();
    Point q{};
    for_each_edge(s, [&](Point a, Point b) {
        const Point c = nearest_on_segment(p, a, b);
        const double d = std::hypot(p.x - c.x, p.y - c.y);
        if (d < best) best = d, q = c;
    });
    return q;
}

inline double boundary_distance(const Shape& s, Point p) {
    const Point q = nearest_on_boundary(s, p);
    return std::hypot(p.x - q.x, p.y - q.y);
}

/// Distance from p to the filled region.
inline double region_distance(const Shape& s, Point p) { return inside(s, p) ? 0.0 : boundary_distance(s, p); }

/// Cell-centered boolean raster over a box.
struct Raster {
    Box box;
    double spacing;
    int nx, ny;
    std::vector<std::uint8_t> cells;

    Raster(Box b, double h) : box(b), spacing(h) {
        nx = static_cast<int>(std::ceil((b.max.x - b.min.x) / h));
        ny = static_cast<int>(std::ceil((b.max.y - b.min.y) / h));
        cells.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), 0);
    }
    Point center(int i, int j) const { return {box.min.x + (i + 0.5) * spacing, box.min.y + (j + 0.5) * spacing}; }
    std::uint8_t& at(int i, int j) { return cells[static_cast<std::size_t>(j) * nx + i]; }
    std::uint8_t at(int i, int j) const { return cells[static_cast<std::size_t>(j) * nx + i]; }

    template <class Pred>
    static Raster of(Box b, double h, Pred pred) {
        Raster r(b, h);
        for (int j = 0; j < r.ny; ++j)
            for (int i = 0; i < r.nx; ++i) r.at(i, j) = pred(r.center(i, j)) ? 1 : 0;
        return r;
    }

    double area() const {
        return static_cast<double>(std::count(cells.begin(), cells.end(), 1)) * spacing * spacing;
    }

    /// 4-connected components of set cells.
    int components() const {
        std::vector<std::uint8_t> seen(cells.size(), 0);
        int count = 0;
        std::vector<std::pair<int, int>> stack;
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                if (!at(i, j) || seen[static_cast<std::size_t>(j) * nx + i]) continue;
                ++count;
                stack.push_back({i, j});
                seen[static_cast<std::size_t>(j) * nx + i] = 1;
                while (!stack.empty()) {
                    auto [x, y] = stack.back();
                    stack.pop_back();
                    const int nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
                    for (auto& n : nb) {
                        if (n[0] < 0 || n[1] < 0 || n[0] >= nx || n[1] >= ny || !at(n[0], n[1])) continue;
                        auto& s = seen[static_cast<std::size_t>(n[1]) * nx + n[0]];
                        if (!s) s = 1, stack.push_back({n[0], n[1]});
                    }
                }
            }
        return count;
    }

    /// Cells whose whole radius-r neighborhood (in cell centers) is set.
    Raster eroded(double r) const {
        Raster out(box, spacing);
        const int k = static_cast<int>(std::floor(r / spacing));
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                bool all = at(i, j) != 0;
                for (int dj = -k; all && dj <= k; ++dj)
                    for (int di = -k; all && di <= k; ++di) {
                        if ((di * di + dj * dj) * spacing * spacing > r * r) continue;
                        const int x = i + di, y = j + dj;
                        if (x < 0 || y < 0 || x >= nx || y >= ny || !at(x, y)) all = false;
                    }
                out.at(i, j) = all ? 1 : 0;
            }
        return out;
    }
};

/// Raster of {p : dist(p, s) <= r}.
inline Raster dilation_raster(const Shape& s, double r, Box box, double h) {
    return Raster::of(box, h, [&](Point p) { return region_distance(s, p) <= r; });
}

/// Raster of {p in s : dist(p, boundary) >= r}.
inline Raster erosion_raster(const Shape& s, double r, Box box, double h) {
    return Raster::of(box, h, [&](Point p) { return inside(s, p) && boundary_distance(s, p) >= r; });
}

/// Raster closing: erosion of the exact dilation raster.
inline Raster closing_raster(const Shape& s, double r, Box box, double h) {
    return dilation_raster(s, r, box, h).eroded(r);
}

/// Area of the Minkowski sum of the axis-aligned unit square with the regular
/// k-gon of circumradius r that has a vertex on the +x axis (k divisible by
/// 4): square + four edge slabs of depth r + polygon.
inline double rounded_square_area(double side, double r, int k) {
    return side * side + 4.0 * side * r + 0.5 * k * r * r * std::sin(2.0 * std::numbers::pi / k);
}

/// Directed Hausdorff estimate from dense samples of a (boundary every h,
/// interior grid pitch h).
inline double directed_hausdorff(const Shape& a, const Shape& b, double h) {
    double worst = 0.0;
    for_each_edge(a, [&](Point p0, Point p1) {
        const double len = std::hypot(p1.x - p0.x, p1.y - p0.y);
        const int n = std::max(1, static_cast<int>(std::ceil(len / h)));
        for (int i = 0; i <= n; ++i) {
            const double t = static_cast<double>(i) / n;
            worst = std::max(worst, region_distance(b, {p0.x + t * (p1.x - p0.x), p0.y + t * (p1.y - p0.y)}));
        }
    });
    const Box box = a.bounds();
    for (double y = box.min.y + 0.5 * h; y < box.max.y; y += h)
        for (double x = box.min.x + 0.5 * h; x < box.max.x; x += h)
            if (inside(a, {x, y})) worst = std::max(worst, region_distance(b, {x, y}));
    return worst;
}

inline double hausdorff(const Shape& a, const Shape& b, double h) {
    return std::max(directed_hausdorff(a, b, h), directed_hausdorff(b, a, h));
}

}  // namespace hausmorph::oracle
