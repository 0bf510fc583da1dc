#include "hausmorph/segment_voronoi.hpp"

#include <boost/polygon/point_data.hpp>
#include <boost/polygon/segment_data.hpp>
#include <boost/polygon/voronoi.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace hausmorph {

namespace bp = boost::polygon;

namespace {

using IPoint = bp::point_data<int>;
using ISegment = bp::segment_data<int>;
using Diagram = bp::voronoi_diagram<double>;
using i128 = __int128;

struct Key {
    std::int64_t x, y;
    friend bool operator==(Key, Key) = default;
    friend bool operator<(Key a, Key b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

struct KeyHash {
    std::size_t operator()(Key k) const {
        return std::hash<std::int64_t>()(k.x * 0x9E3779B97F4A7C15LL ^ k.y);
    }
};

/// Maps model coordinates onto the int32 grid the Voronoi builder requires.
class Quantizer {
public:
    explicit Quantizer(const Box& extent) {
        center_ = {0.5 * (extent.min.x + extent.max.x), 0.5 * (extent.min.y + extent.max.y)};
        const double half = std::max({extent.width(), extent.height(), 1e-300}) * 0.5;
        // Power of two so that dyadic inputs stay exact.
        scale_ = std::exp2(std::floor(std::log2(std::ldexp(1.0, 30) / half)));
    }

    Key map(Point p) const {
        return {std::llround((p.x - center_.x) * scale_), std::llround((p.y - center_.y) * scale_)};
    }
    Point unmap(double x, double y) const { return {x / scale_ + center_.x, y / scale_ + center_.y}; }
    Point unmap(Key k) const { return unmap(static_cast<double>(k.x), static_cast<double>(k.y)); }
    double scale() const { return scale_; }

private:
    Point center_;
    double scale_ = 1.0;
};

struct ISeg {
    Key a, b;
};

i128 orient(Key a, Key b, Key c) {
    return static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

bool within_box(Key a, Key b, Key p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

/// Splits segments wherever they cross or touch away from shared endpoints,
/// and removes duplicates, so the Voronoi builder sees a planar segment set.
std::vector<ISeg> planarize(std::vector<ISeg> segs) {
    const std::size_t n = segs.size();
    std::vector<std::vector<Key>> splits(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto xmin = [&](std::size_t i) { return std::min(segs[i].a.x, segs[i].b.x); };
    auto xmax = [&](std::size_t i) { return std::max(segs[i].a.x, segs[i].b.x); };
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return xmin(l) < xmin(r); });

    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t i = order[s];
        const ISeg& p = segs[i];
        for (std::size_t u = s + 1; u < n && xmin(order[u]) <= xmax(i); ++u) {
            const std::size_t j = order[u];
            const ISeg& q = segs[j];
            if (std::max(p.a.y, p.b.y) < std::min(q.a.y, q.b.y) || std::max(q.a.y, q.b.y) < std::min(p.a.y, p.b.y))
                continue;
            const i128 d1 = orient(q.a, q.b, p.a), d2 = orient(q.a, q.b, p.b);
            const i128 d3 = orient(p.a, p.b, q.a), d4 = orient(p.a, p.b, q.b);
            if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
                const long double t = static_cast<long double>(d3) / static_cast<long double>(d3 - d4);
                const Key x{static_cast<std::int64_t>(std::llround(q.a.x + t * (q.b.x - q.a.x))),
                            static_cast<std::int64_t>(std::llround(q.a.y + t * (q.b.y - q.a.y)))};
                splits[i].push_back(x);
                splits[j].push_back(x);
                continue;
            }
            // Touching or collinear contacts: split at the contact endpoints.
            auto touch = [&](const ISeg& seg, Key pt, i128 o, std::size_t owner) {
                if (o == 0 && within_box(seg.a, seg.b, pt) && !(pt == seg.a) && !(pt == seg.b))
                    splits[owner].push_back(pt);
            };
            touch(q, p.a, d1, j);
            touch(q, p.b, d2, j);
            touch(p, q.a, d3, i);
            touch(p, q.b, d4, i);
        }
    }

    std::vector<ISeg> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& pts = splits[i];
        const ISeg& s = segs[i];
        if (pts.empty()) {
            out.push_back(s);
            continue;
        }
        const double dx = static_cast<double>(s.b.x - s.a.x), dy = static_cast<double>(s.b.y - s.a.y);
        auto param = [&](Key k) { return (static_cast<double>(k.x - s.a.x) * dx + static_cast<double>(k.y - s.a.y) * dy); };
        std::sort(pts.begin(), pts.end(), [&](Key l, Key r) { return param(l) < param(r); });
        Key prev = s.a;
        for (Key k : pts) {
            if (!(k == prev)) out.push_back({prev, k});
            prev = k;
        }
        if (!(prev == s.b)) out.push_back({prev, s.b});
    }

    for (auto& s : out)
        if (s.b < s.a) std::swap(s.a, s.b);
    std::sort(out.begin(), out.end(), [](const ISeg& l, const ISeg& r) {
        return l.a < r.a || (l.a == r.a && l.b < r.b);
    });
    out.erase(std::unique(out.begin(), out.end(), [](const ISeg& l, const ISeg& r) { return l.a == r.a && l.b == r.b; }),
              out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [](const ISeg& s) { return s.a == s.b; }), out.end());
    return out;
}

/// Points strictly between the endpoints of the parabolic arc with the given
/// focus and directrix, spaced so that no chord strays more than `tolerance`
/// from the arc. Works in grid units.
std::vector<Point> parabola_interior(Point v0, Point v1, Point focus, Point la, Point lb, double tolerance) {
    const Vector dir = lb - la;
    const double len = norm(dir);
    const Vector u = (1.0 / len) * dir;
    Vector n{-u.y, u.x};
    double fy = dot(focus - la, n);
    if (fy < 0) {
        n = -n;
        fy = -fy;
    }
    if (!(fy > 0)) return {};
    const double fx = dot(focus - la, u);
    const double x0 = dot(v0 - la, u), x1 = dot(v1 - la, u);
    const double step = std::sqrt(8.0 * fy * tolerance);
    const double steps = std::ceil(std::abs(x1 - x0) / step);
    const int count = static_cast<int>(std::min(steps, 100000.0));
    std::vector<Point> pts;
    for (int i = 1; i < count; ++i) {
        const double x = x0 + (x1 - x0) * i / count;
        const double y = ((x - fx) * (x - fx) + fy * fy) / (2.0 * fy);
        pts.push_back(la + x * u + y * n);
    }
    return pts;
}

}  // namespace

const char* to_string(SiteKind kind) {
    switch (kind) {
        case SiteKind::vertex:
            return "vertex";
        case SiteKind::edge:
            return "edge";
        case SiteKind::interior:
            return "interior";
    }
    return "?";
}

SegmentVoronoi::SegmentVoronoi(const Shape& shape, const Box& region, double arc_tolerance) {
    if (shape.empty()) throw GeometryError("Voronoi diagram of an empty shape");
    if (!(arc_tolerance > 0)) throw GeometryError("arc tolerance must be positive");

    Box extent = region;
    extent.expand(shape.bounds());
    const double diag = std::max(extent.diagonal(), 1e-12);
    // Every point of `extent` is nearer to the shape than to this frame.
    const Box frame = extent.inflated(1.05 * diag + 1e-9);
    const Quantizer quant(frame);

    std::unordered_map<Key, Point, KeyHash> originals;
    std::vector<ISeg> segs;
    auto add_ring = [&](const Ring& ring) {
        const auto& v = ring.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Key a = quant.map(v[i]), b = quant.map(v[(i + 1) % v.size()]);
            originals.try_emplace(a, v[i]);
            if (!(a == b)) segs.push_back({a, b});
        }
    };
    for (const auto& poly : shape.polygons) {
        add_ring(poly.outer);
        for (const auto& h : poly.holes) add_ring(h);
    }
    segs = planarize(std::move(segs));
    const std::size_t real_count = segs.size();
    if (real_count == 0) throw GeometryError("shape collapses on the Voronoi grid");

    const Key f0 = quant.map(frame.min), f2 = quant.map(frame.max);
    const Key f1{f2.x, f0.y}, f3{f0.x, f2.y};
    segs.push_back({f0, f1});
    segs.push_back({f1, f2});
    segs.push_back({f2, f3});
    segs.push_back({f3, f0});

    std::vector<ISegment> input;
    input.reserve(segs.size());
    for (const auto& s : segs)
        input.emplace_back(IPoint(static_cast<int>(s.a.x), static_cast<int>(s.a.y)),
                           IPoint(static_cast<int>(s.b.x), static_cast<int>(s.b.y)));
    Diagram vd;
    bp::construct_voronoi(input.begin(), input.end(), &vd);

    auto model_point = [&](Key k) {
        auto it = originals.find(k);
        return it != originals.end() ? it->second : quant.unmap(k);
    };
    auto site_of = [&](const Diagram::cell_type& cell) -> Site {
        const ISeg& s = segs[cell.source_index()];
        if (cell.contains_point())
            return Site::at_vertex(
                model_point(cell.source_category() == bp::SOURCE_CATEGORY_SEGMENT_START_POINT ? s.a : s.b));
        return Site::on_edge(model_point(s.a), model_point(s.b));
    };
    auto is_real = [&](const Diagram::cell_type* cell) { return cell->source_index() < real_count; };
    auto grid_point = [](const ISegment& seg, bool low) {
        const auto& p = low ? bp::low(seg) : bp::high(seg);
        return Point{static_cast<double>(bp::x(p)), static_cast<double>(bp::y(p))};
    };
    auto point_site_grid = [&](const Diagram::cell_type& cell) {
        return grid_point(input[cell.source_index()], cell.source_category() == bp::SOURCE_CATEGORY_SEGMENT_START_POINT);
    };

    const double tol_grid = arc_tolerance * quant.scale();
    std::unordered_map<const Diagram::edge_type*, std::vector<Point>> polylines;
    auto canonical = [](const Diagram::edge_type* e) { return std::min(e, e->twin()); };
    auto polyline = [&](const Diagram::edge_type* e) -> const std::vector<Point>& {
        const Diagram::edge_type* c = canonical(e);
        auto it = polylines.find(c);
        if (it != polylines.end()) return it->second;
        const Point g0{c->vertex0()->x(), c->vertex0()->y()};
        const Point g1{c->vertex1()->x(), c->vertex1()->y()};
        std::vector<Point> pts{quant.unmap(g0.x, g0.y)};
        if (c->is_curved()) {
            const auto* pc = c->cell()->contains_point() ? c->cell() : c->twin()->cell();
            const auto* sc = c->cell()->contains_point() ? c->twin()->cell() : c->cell();
            const ISegment& seg = input[sc->source_index()];
            for (Point g : parabola_interior(g0, g1, point_site_grid(*pc), grid_point(seg, true), grid_point(seg, false),
                                             tol_grid))
                pts.push_back(quant.unmap(g.x, g.y));
        }
        pts.push_back(quant.unmap(g1.x, g1.y));
        return polylines.emplace(c, std::move(pts)).first->second;
    };

    for (const auto& cell : vd.cells()) {
        if (!is_real(&cell) || cell.is_degenerate()) continue;
        VoronoiCell out{site_of(cell), {}};
        const auto* start = cell.incident_edge();
        const auto* e = start;
        do {
            if (e->is_infinite()) throw GeometryError("unbounded Voronoi cell for a boundary feature");
            const auto& pl = polyline(e);
            if (canonical(e) == e) {
                out.boundary.vertices.insert(out.boundary.vertices.end(), pl.begin(), pl.end() - 1);
            } else {
                out.boundary.vertices.insert(out.boundary.vertices.end(), pl.rbegin(), pl.rend() - 1);
            }
            e = e->next();
        } while (e != start);
        auto& v = out.boundary.vertices;
        v.erase(std::unique(v.begin(), v.end()), v.end());
        while (v.size() > 1 && v.front() == v.back()) v.pop_back();
        if (v.size() < 3) continue;
        if (out.boundary.signed_area() < 0) out.boundary.reverse();
        if (out.boundary.signed_area() <= 0) continue;
        cells_.push_back(std::move(out));
    }

    std::vector<Point> verts;
    for (const auto& e : vd.edges()) {
        if (canonical(&e) != &e || e.is_infinite()) continue;
        if (!is_real(e.cell()) || !is_real(e.twin()->cell())) continue;
        VoronoiEdge out;
        out.p0 = quant.unmap(e.vertex0()->x(), e.vertex0()->y());
        out.p1 = quant.unmap(e.vertex1()->x(), e.vertex1()->y());
        if (e.is_curved()) {
            const auto* pc = e.cell()->contains_point() ? e.cell() : e.twin()->cell();
            const auto* sc = e.cell()->contains_point() ? e.twin()->cell() : e.cell();
            const Site ps = site_of(*pc), ss = site_of(*sc);
            out.parabolic = true;
            out.focus = ps.vertex;
            out.directrix_start = ss.edge_start;
            out.directrix_end = ss.edge_end;
        }
        edges_.push_back(out);
        verts.push_back(out.p0);
        verts.push_back(out.p1);
    }
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    vertices_ = std::move(verts);
}

}  // namespace hausmorph
