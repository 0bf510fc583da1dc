#include "hausmorph/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "geometry_internal.hpp"

namespace hausmorph {

void Box::expand(Point p) {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
}

void Box::expand(const Box& other) {
    if (other.empty()) return;
    expand(other.min);
    expand(other.max);
}

Box Box::inflated(double margin) const {
    if (empty()) return *this;
    return {{min.x - margin, min.y - margin}, {max.x + margin, max.y + margin}};
}

bool Box::overlaps(const Box& other) const {
    return !(empty() || other.empty() || other.min.x > max.x || other.max.x < min.x || other.min.y > max.y ||
             other.max.y < min.y);
}

double Ring::signed_area() const {
    const std::size_t n = vertices.size();
    if (n < 3) return 0.0;
    // Shoelace relative to the first vertex keeps cancellation small.
    const Point o = vertices[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) twice += cross(vertices[i] - o, vertices[i + 1] - o);
    return 0.5 * twice;
}

double Ring::length() const {
    const std::size_t n = vertices.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += distance(vertices[i], vertices[(i + 1) % n]);
    return total;
}

Box Ring::bounds() const {
    Box box;
    for (Point p : vertices) box.expand(p);
    return box;
}

void Ring::reverse() { std::reverse(vertices.begin(), vertices.end()); }

double PolygonWithHoles::area() const {
    double a = outer.signed_area();
    for (const Ring& h : holes) a -= std::abs(h.signed_area());
    return a;
}

std::size_t PolygonWithHoles::vertex_count() const {
    std::size_t n = outer.size();
    for (const Ring& h : holes) n += h.size();
    return n;
}

std::size_t Shape::vertex_count() const {
    std::size_t n = 0;
    for (const auto& p : polygons) n += p.vertex_count();
    return n;
}

Box Shape::bounds() const {
    Box box;
    for (const auto& p : polygons) box.expand(p.bounds());
    return box;
}

Shape with_normalized_orientation(Shape shape) {
    for (auto& poly : shape.polygons) {
        if (poly.outer.signed_area() < 0) poly.outer.reverse();
        for (auto& hole : poly.holes)
            if (hole.signed_area() > 0) hole.reverse();
    }
    return shape;
}

namespace {

bool collinear_overlap(Point a0, Point a1, Point b0, Point b1) {
    if (detail::orient(a0, a1, b0) != 0.0 || detail::orient(a0, a1, b1) != 0.0) return false;
    const Vector d = a1 - a0;
    const double len2 = dot(d, d);
    double t0 = dot(b0 - a0, d) / len2;
    double t1 = dot(b1 - a0, d) / len2;
    if (t0 > t1) std::swap(t0, t1);
    return std::min(t1, 1.0) - std::max(t0, 0.0) > 0.0;
}

/// 1 inside the ring, 0 on its boundary, -1 outside.
int locate(Point p, const Ring& ring) {
    const auto& v = ring.vertices;
    bool in = false;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        const double o = detail::orient(a, b, p);
        if (o == 0.0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
            p.y <= std::max(a.y, b.y))
            return 0;
        if ((a.y > p.y) != (b.y > p.y) && (o > 0) == (b.y > a.y)) in = !in;
    }
    return in ? 1 : -1;
}

}  // namespace

bool is_simple(const Ring& ring) {
    const auto& v = ring.vertices;
    const std::size_t n = v.size();
    if (n < 3) return false;

    struct Edge {
        double xmin, xmax;
        std::size_t i;
    };
    std::vector<Edge> edges(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        edges[i] = {std::min(a.x, b.x), std::max(a.x, b.x), i};
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) { return l.xmin < r.xmin; });

    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t i = edges[s].i;
        const Point a0 = v[i], a1 = v[(i + 1) % n];
        for (std::size_t u = s + 1; u < n && edges[u].xmin <= edges[s].xmax; ++u) {
            const std::size_t j = edges[u].i;
            const Point b0 = v[j], b1 = v[(j + 1) % n];
            const bool adjacent = (j == (i + 1) % n) || (i == (j + 1) % n);
            if (adjacent) {
                if (n == 3) continue;
                if (collinear_overlap(a0, a1, b0, b1)) return false;
                continue;
            }
            if (detail::segments_intersect(a0, a1, b0, b1)) return false;
        }
    }
    return true;
}

void validate(const Shape& shape) {
    std::size_t ring_index = 0;
    auto check_ring = [&](const Ring& ring, std::size_t poly, std::size_t r, bool hole) {
        auto fail = [&](const std::string& why) {
            std::ostringstream msg;
            msg << "polygon " << poly << (hole ? " hole " : " outer ring") << (hole ? std::to_string(r - 1) : "")
                << " (ring " << ring_index << "): " << why;
            throw ValidationError(msg.str(), poly, r, ring_index);
        };
        const auto& v = ring.vertices;
        if (v.size() < 3) fail("fewer than 3 vertices");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!std::isfinite(v[i].x) || !std::isfinite(v[i].y)) fail("non-finite coordinate");
            if (v[i] == v[(i + 1) % v.size()]) fail("repeated consecutive vertex");
        }
        const double a = ring.signed_area();
        if (a == 0.0) fail("zero area");
        if (hole ? a > 0 : a < 0) fail(hole ? "hole is not clockwise" : "outer ring is not counterclockwise");
        if (!is_simple(ring)) fail("self-intersection");
        ++ring_index;
    };

    for (std::size_t p = 0; p < shape.polygons.size(); ++p) {
        const auto& poly = shape.polygons[p];
        check_ring(poly.outer, p, 0, false);
        for (std::size_t h = 0; h < poly.holes.size(); ++h) check_ring(poly.holes[h], p, h + 1, true);
    }

    // Rings may touch at isolated points but never cross or share an edge.
    struct Edge {
        double xmin, xmax;
        std::size_t ring, i;
    };
    struct RingRef {
        std::size_t poly, ring;
        const Ring* r;
    };
    std::vector<RingRef> rings;
    for (std::size_t p = 0; p < shape.polygons.size(); ++p) {
        rings.push_back({p, 0, &shape.polygons[p].outer});
        for (std::size_t h = 0; h < shape.polygons[p].holes.size(); ++h)
            rings.push_back({p, h + 1, &shape.polygons[p].holes[h]});
    }
    auto fail_at = [&](std::size_t global, const std::string& why) {
        const RingRef& ref = rings[global];
        throw ValidationError("polygon " + std::to_string(ref.poly) + " ring " + std::to_string(ref.ring) + ": " + why,
                              ref.poly, ref.ring, global);
    };

    std::vector<Edge> edges;
    for (std::size_t g = 0; g < rings.size(); ++g) {
        const auto& v = rings[g].r->vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point a = v[i], b = v[(i + 1) % v.size()];
            edges.push_back({std::min(a.x, b.x), std::max(a.x, b.x), g, i});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) { return l.xmin < r.xmin; });
    auto ends = [&](const Edge& e) {
        const auto& v = rings[e.ring].r->vertices;
        return std::pair{v[e.i], v[(e.i + 1) % v.size()]};
    };
    for (std::size_t s = 0; s < edges.size(); ++s) {
        const auto [a0, a1] = ends(edges[s]);
        for (std::size_t u = s + 1; u < edges.size() && edges[u].xmin <= edges[s].xmax; ++u) {
            if (edges[u].ring == edges[s].ring) continue;
            const auto [b0, b1] = ends(edges[u]);
            const double d1 = detail::orient(b0, b1, a0), d2 = detail::orient(b0, b1, a1);
            const double d3 = detail::orient(a0, a1, b0), d4 = detail::orient(a0, a1, b1);
            const bool proper = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
            if (proper || collinear_overlap(a0, a1, b0, b1))
                fail_at(std::max(edges[s].ring, edges[u].ring),
                        "crosses ring " + std::to_string(std::min(edges[s].ring, edges[u].ring)));
        }
    }

    // With no crossings, one vertex off the other ring's boundary decides
    // containment.
    auto inside = [](const Ring& inner, const Ring& outer) {
        for (Point p : inner.vertices) {
            const int where = locate(p, outer);
            if (where != 0) return where > 0;
        }
        return false;
    };
    std::size_t first = 0;
    for (std::size_t p = 0; p < shape.polygons.size(); ++p) {
        const auto& poly = shape.polygons[p];
        for (std::size_t h = 0; h < poly.holes.size(); ++h) {
            if (!inside(poly.holes[h], poly.outer)) fail_at(first + 1 + h, "hole outside its outer ring");
            for (std::size_t k = 0; k < poly.holes.size(); ++k)
                if (k != h && inside(poly.holes[h], poly.holes[k])) fail_at(first + 1 + h, "hole inside another hole");
        }
        first += 1 + poly.holes.size();
    }
    auto covers = [&](const PolygonWithHoles& outer, const Ring& ring) {
        if (!inside(ring, outer.outer)) return false;
        return std::none_of(outer.holes.begin(), outer.holes.end(), [&](const Ring& h) { return inside(ring, h); });
    };
    std::vector<Box> boxes;
    std::vector<std::size_t> outer_index;
    for (std::size_t g = 0; g < rings.size(); ++g)
        if (rings[g].ring == 0) outer_index.push_back(g);
    for (const auto& poly : shape.polygons) boxes.push_back(poly.bounds());
    for (std::size_t p = 0; p < shape.polygons.size(); ++p)
        for (std::size_t q = p + 1; q < shape.polygons.size(); ++q) {
            if (!boxes[p].overlaps(boxes[q])) continue;
            if (covers(shape.polygons[p], shape.polygons[q].outer) || covers(shape.polygons[q], shape.polygons[p].outer))
                fail_at(outer_index[q], "overlaps polygon " + std::to_string(p));
        }
}

double area(const Shape& shape) {
    double a = 0.0;
    for (const auto& p : shape.polygons) a += p.area();
    return a;
}

double perimeter(const Shape& shape) {
    double total = 0.0;
    for (const auto& p : shape.polygons) {
        total += p.outer.length();
        for (const auto& h : p.holes) total += h.length();
    }
    return total;
}

Measurements measure(const Shape& shape, double min_feature_area) {
    Measurements m;
    for (const auto& poly : shape.polygons) {
        double a = poly.outer.signed_area();
        double len = poly.outer.length();
        int holes = 0;
        for (const auto& h : poly.holes) {
            const double ha = std::abs(h.signed_area());
            if (ha <= min_feature_area) continue;
            a -= ha;
            len += h.length();
            ++holes;
        }
        if (a <= min_feature_area) continue;
        m.area += a;
        m.perimeter += len;
        m.components += 1;
        m.holes += holes;
    }
    return m;
}

Point centroid(const Shape& shape) {
    if (shape.empty()) throw GeometryError("centroid of an empty shape");
    double total = 0.0, cx = 0.0, cy = 0.0;
    auto accumulate = [&](const Ring& ring) {
        const auto& v = ring.vertices;
        const Point o = v[0];
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            const Vector e1 = v[i] - o, e2 = v[i + 1] - o;
            const double w = 0.5 * cross(e1, e2);
            total += w;
            cx += w * (o.x + (e1.x + e2.x) / 3.0);
            cy += w * (o.y + (e1.y + e2.y) / 3.0);
        }
    };
    // Holes are clockwise, so their signed contributions subtract.
    for (const auto& poly : shape.polygons) {
        accumulate(poly.outer);
        for (const auto& h : poly.holes) accumulate(h);
    }
    if (!(std::abs(total) > 0.0)) throw GeometryError("centroid of a zero-area shape");
    return {cx / total, cy / total};
}

Shape transform(const Shape& shape, Vector translation, double scale, Point center) {
    Shape out = shape;
    auto map = [&](Ring& ring) {
        for (Point& p : ring.vertices) p = center + scale * (p - center) + translation;
    };
    for (auto& poly : out.polygons) {
        map(poly.outer);
        for (auto& h : poly.holes) map(h);
    }
    return out;
}

Shape translate(const Shape& shape, Vector translation) { return transform(shape, translation, 1.0, {}); }

namespace detail {

bool segments_intersect(Point p0, Point p1, Point q0, Point q1) {
    if (std::max(p0.x, p1.x) < std::min(q0.x, q1.x) || std::max(q0.x, q1.x) < std::min(p0.x, p1.x) ||
        std::max(p0.y, p1.y) < std::min(q0.y, q1.y) || std::max(q0.y, q1.y) < std::min(p0.y, p1.y))
        return false;
    const double d1 = orient(q0, q1, p0), d2 = orient(q0, q1, p1);
    const double d3 = orient(p0, p1, q0), d4 = orient(p0, p1, q1);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    auto on_segment = [](Point a, Point b, Point p) {
        return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
               p.y <= std::max(a.y, b.y);
    };
    if (d1 == 0 && on_segment(q0, q1, p0)) return true;
    if (d2 == 0 && on_segment(q0, q1, p1)) return true;
    if (d3 == 0 && on_segment(p0, p1, q0)) return true;
    if (d4 == 0 && on_segment(p0, p1, q1)) return true;
    return false;
}

double point_segment_distance2(Point p, Point a, Point b, double* t_out) {
    const Vector d = b - a;
    const double len2 = dot(d, d);
    double t = len2 > 0 ? dot(p - a, d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (t_out) *t_out = t;
    const Point q = a + t * d;
    const Vector e = p - q;
    return dot(e, e);
}

}  // namespace detail
}  // namespace hausmorph
