#include "hausmorph/boolean.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <clipper2/clipper.h>

namespace hausmorph {

namespace bg = boost::geometry;
using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint>;

double error_bound(double radius, int segments) {
    return radius * (1.0 - std::cos(std::numbers::pi / segments));
}

double DiskApprox::error_bound() const { return hausmorph::error_bound(radius, segments); }

std::vector<Point> DiskApprox::vertices() const {
    std::vector<Point> v(static_cast<std::size_t>(segments));
    for (int i = 0; i < segments; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / segments;
        v[static_cast<std::size_t>(i)] = {radius * std::cos(angle), radius * std::sin(angle)};
    }
    return v;
}

void check(const DiskApprox& disk) {
    if (!(disk.radius >= 0.0) || !std::isfinite(disk.radius)) throw GeometryError("disk radius must be >= 0");
    if (disk.segments < 8 || disk.segments % 2 != 0) throw GeometryError("disk segments must be even and >= 8");
}

namespace {

namespace c2 = Clipper2Lib;

using Wide = __int128;

Wide cross(const c2::Point64& o, const c2::Point64& a, const c2::Point64& b) {
    return static_cast<Wide>(a.x - o.x) * (b.y - o.y) - static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

Wide twice_area(const c2::Path64& path) {
    Wide sum = 0;
    for (std::size_t i = 0, n = path.size(); i < n; ++i) {
        const auto& p = path[i];
        const auto& q = path[(i + 1) % n];
        sum += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
    }
    return sum;
}

/// Drops repeated and collinear vertices, which also removes zero-width
/// spikes. Exact on the integer grid.
c2::Path64 drop_collinear(c2::Path64 path) {
    for (bool changed = true; changed && path.size() >= 3;) {
        changed = false;
        c2::Path64 kept;
        kept.reserve(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto& prev = kept.empty() ? path.back() : kept.back();
            if (cross(prev, path[i], path[(i + 1) % path.size()]) == 0) {
                changed = true;
                continue;
            }
            kept.push_back(path[i]);
        }
        path = std::move(kept);
    }
    if (path.size() < 3) path.clear();
    return path;
}

/// Splits a ring that touches itself at a vertex into simple loops.
std::vector<c2::Path64> simple_loops(const c2::Path64& input) {
    std::vector<c2::Path64> loops;
    std::vector<c2::Path64> pending{drop_collinear(input)};
    while (!pending.empty()) {
        c2::Path64 path = std::move(pending.back());
        pending.pop_back();
        if (path.empty()) continue;
        c2::Path64 stack;
        std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
        bool split = false;
        for (const auto& p : path) {
            const auto it = seen.find({p.x, p.y});
            if (it == seen.end()) {
                seen.emplace(std::pair{p.x, p.y}, stack.size());
                stack.push_back(p);
                continue;
            }
            const std::size_t start = it->second;
            for (std::size_t k = start + 1; k < stack.size(); ++k) seen.erase({stack[k].x, stack[k].y});
            pending.push_back(drop_collinear(c2::Path64(stack.begin() + static_cast<std::ptrdiff_t>(start), stack.end())));
            stack.resize(start + 1);
            split = true;
        }
        if (split) {
            pending.push_back(drop_collinear(std::move(stack)));
        } else if (twice_area(stack) != 0) {
            loops.push_back(std::move(stack));
        }
    }
    return loops;
}

/// Whether `inner` lies inside `outer`, decided by the first vertex of
/// `inner` that is not on `outer`'s boundary.
bool inside_loop(const c2::Path64& inner, const c2::Path64& outer) {
    for (const auto& p : inner) {
        bool on_edge = false, in = false;
        for (std::size_t i = 0, n = outer.size(); i < n && !on_edge; ++i) {
            const auto& a = outer[i];
            const auto& b = outer[(i + 1) % n];
            if (cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
                on_edge = true;
            } else if ((a.y > p.y) != (b.y > p.y)) {
                // Crossing to the right of p: sign of the orientation test
                // matches the edge direction.
                const Wide c = cross(a, b, p);
                if ((c > 0) == (b.y > a.y)) in = !in;
            }
        }
        if (!on_edge) return in;
    }
    return false;
}

/// Largest coordinate magnitude maps below 2^kGridBits grid units.
constexpr int kGridBits = 29;

/// Integer grid with a power-of-two pitch, so grids chosen for different
/// operands nest and conversions back to double are exact.
struct Grid {
    double scale = 1.0;

    static Grid fitting(std::initializer_list<const Shape*> shapes) {
        double extent = 0.0;
        for (const Shape* s : shapes)
            for (const auto& poly : s->polygons)
                for (Point p : poly.outer.vertices) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
        if (!(extent > 0.0)) extent = 1.0;
        int e = 0;
        std::frexp(extent, &e);  // extent < 2^e
        return {std::ldexp(1.0, kGridBits - e)};
    }

    c2::Path64 path(const Ring& r) const {
        c2::Path64 pts;
        pts.reserve(r.vertices.size());
        for (Point p : r.vertices) pts.emplace_back(std::llround(p.x * scale), std::llround(p.y * scale));
        return pts;
    }

    c2::Paths64 paths(const Shape& shape) const {
        c2::Paths64 out;
        for (const auto& poly : shape.polygons) {
            out.push_back(path(poly.outer));
            for (const auto& h : poly.holes) out.push_back(path(h));
        }
        return out;
    }

    Ring ring(const c2::Path64& path) const {
        Ring r;
        r.vertices.reserve(path.size());
        for (const auto& p : path)
            r.vertices.push_back({static_cast<double>(p.x) / scale, static_cast<double>(p.y) / scale});
        return r;
    }

    void collect(const c2::PolyPath64& outer, Shape& out) const {
        std::vector<c2::Path64> outers, holes;
        const bool ccw = twice_area(outer.Polygon()) > 0;
        for (auto& loop : simple_loops(outer.Polygon())) ((twice_area(loop) > 0) == ccw ? outers : holes).push_back(loop);
        for (const auto& hole : outer) {
            for (auto& loop : simple_loops(hole->Polygon()))
                ((twice_area(loop) > 0) == ccw ? outers : holes).push_back(loop);
            for (const auto& island : *hole) collect(*island, out);
        }
        std::vector<PolygonWithHoles> polys;
        for (const auto& o : outers) polys.push_back({ring(o), {}});
        for (const auto& h : holes) {
            std::size_t owner = 0;
            for (std::size_t i = 0; i < outers.size() && outers.size() > 1; ++i)
                if (inside_loop(h, outers[i])) {
                    owner = i;
                    break;
                }
            if (!polys.empty()) polys[owner].holes.push_back(ring(h));
        }
        for (auto& poly : polys) out.polygons.push_back(std::move(poly));
    }

    Shape run(c2::ClipType op, const c2::Paths64& subject, const c2::Paths64& clip = {}) const {
        c2::Clipper64 clipper;
        clipper.PreserveCollinear(false);
        clipper.AddSubject(subject);
        if (!clip.empty()) clipper.AddClip(clip);
        c2::PolyTree64 tree;
        if (!clipper.Execute(op, c2::FillRule::NonZero, tree)) throw GeometryError("polygon clipping failed");
        Shape out;
        for (const auto& outer : tree) collect(*outer, out);
        return with_normalized_orientation(std::move(out));
    }
};

Shape box_shape(const Box& box) {
    PolygonWithHoles p;
    p.outer.vertices = {box.min, {box.max.x, box.min.y}, box.max, {box.min.x, box.max.y}};
    return Shape{{p}};
}

/// Convex hull of the disk polygon placed at both ends of the segment.
Ring swept_segment(Point a, Point b, const std::vector<Point>& disk) {
    bg::model::multi_point<BgPoint> cloud;
    cloud.reserve(2 * disk.size());
    for (Point d : disk) {
        cloud.emplace_back(a.x + d.x, a.y + d.y);
        cloud.emplace_back(b.x + d.x, b.y + d.y);
    }
    BgPolygon hull;
    bg::convex_hull(cloud, hull);
    Ring ring;
    for (const auto& p : hull.outer()) ring.vertices.push_back({p.x(), p.y()});
    ring.vertices.pop_back();
    if (ring.signed_area() < 0) std::reverse(ring.vertices.begin(), ring.vertices.end());
    return ring;
}

}  // namespace

Shape intersect(const Shape& a, const Shape& b) {
    if (a.empty() || b.empty() || !a.bounds().overlaps(b.bounds())) return {};
    const Grid g = Grid::fitting({&a, &b});
    return g.run(c2::ClipType::Intersection, g.paths(a), g.paths(b));
}

Shape unite(const Shape& a, const Shape& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const Grid g = Grid::fitting({&a, &b});
    return g.run(c2::ClipType::Union, g.paths(a), g.paths(b));
}

Shape difference(const Shape& a, const Shape& b) {
    if (a.empty()) return {};
    if (b.empty() || !a.bounds().overlaps(b.bounds())) return a;
    const Grid g = Grid::fitting({&a, &b});
    return g.run(c2::ClipType::Difference, g.paths(a), g.paths(b));
}

Shape unite_all(std::vector<Shape> parts) {
    std::erase_if(parts, [](const Shape& s) { return s.empty(); });
    if (parts.empty()) return {};
    if (parts.size() == 1) return std::move(parts.front());
    double extent = 0.0;
    for (const auto& s : parts) {
        const Box b = s.bounds();
        extent = std::max({extent, std::abs(b.min.x), std::abs(b.min.y), std::abs(b.max.x), std::abs(b.max.y)});
    }
    const Shape probe = box_shape({{-extent, -extent}, {extent, extent}});
    const Grid g = Grid::fitting({&probe});
    c2::Paths64 all;
    for (const auto& s : parts) {
        auto p = g.paths(s);
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return g.run(c2::ClipType::Union, all);
}

double symmetric_difference_area(const Shape& a, const Shape& b) {
    return area(difference(a, b)) + area(difference(b, a));
}

Shape dilate(const Shape& shape, const DiskApprox& disk) {
    check(disk);
    if (shape.empty() || disk.radius == 0.0) return shape;
    const std::vector<Point> polygon = disk.vertices();

    Shape swept = shape;
    auto sweep_ring = [&](const Ring& ring) {
        const auto& v = ring.vertices;
        for (std::size_t i = 0; i < v.size(); ++i)
            swept.polygons.push_back({swept_segment(v[i], v[(i + 1) % v.size()], polygon), {}});
    };
    for (const auto& poly : shape.polygons) {
        sweep_ring(poly.outer);
        for (const auto& h : poly.holes) sweep_ring(h);
    }
    // One sweep unites the shape with every swept edge.
    const Grid g = Grid::fitting({&swept});
    return g.run(c2::ClipType::Union, g.paths(swept));
}

Shape erode(const Shape& shape, const DiskApprox& disk) {
    check(disk);
    if (shape.empty() || disk.radius == 0.0) return shape;
    const Shape box = box_shape(shape.bounds().inflated(2.0 * disk.radius));
    const Shape complement = difference(box, shape);
    return difference(box, dilate(complement, disk));
}

Shape closing(const Shape& shape, const DiskApprox& disk) {
    check(disk);
    if (shape.empty() || disk.radius == 0.0) return shape;
    return erode(dilate(shape, disk), disk);
}

}  // namespace hausmorph
