#pragma once

// Planar shape model: points, rings, polygons with holes and multi-polygon
// shapes, plus the basic measures used throughout the morphing code.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hausmorph {

struct Vector {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vector&, const Vector&) = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Vector operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point p, Vector v) { return {p.x + v.x, p.y + v.y}; }
inline Point operator-(Point p, Vector v) { return {p.x - v.x, p.y - v.y}; }
inline Vector operator+(Vector a, Vector b) { return {a.x + b.x, a.y + b.y}; }
inline Vector operator-(Vector a, Vector b) { return {a.x - b.x, a.y - b.y}; }
inline Vector operator*(double s, Vector v) { return {s * v.x, s * v.y}; }
inline Vector operator*(Vector v, double s) { return {s * v.x, s * v.y}; }
inline Vector operator-(Vector v) { return {-v.x, -v.y}; }

inline double dot(Vector a, Vector b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vector a, Vector b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vector v) { return std::hypot(v.x, v.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Lexicographic (x, y) order.
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

struct Box {
    Point min{+INFINITY, +INFINITY};
    Point max{-INFINITY, -INFINITY};

    bool empty() const { return min.x > max.x || min.y > max.y; }
    void expand(Point p);
    void expand(const Box& other);
    Box inflated(double margin) const;
    bool overlaps(const Box& other) const;
    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double diagonal() const { return std::hypot(width(), height()); }
};

/// Closed polyline stored without repeating the first vertex. Outer rings are
/// counterclockwise (positive signed area), holes clockwise.
struct Ring {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    double signed_area() const;
    double length() const;
    Box bounds() const;
    void reverse();

    friend bool operator==(const Ring&, const Ring&) = default;
};

struct PolygonWithHoles {
    Ring outer;
    std::vector<Ring> holes;

    /// Outer area minus hole areas.
    double area() const;
    Box bounds() const { return outer.bounds(); }
    std::size_t vertex_count() const;

    friend bool operator==(const PolygonWithHoles&, const PolygonWithHoles&) = default;
};

struct Shape {
    std::vector<PolygonWithHoles> polygons;

    bool empty() const { return polygons.empty(); }
    std::size_t vertex_count() const;
    Box bounds() const;

    friend bool operator==(const Shape&, const Shape&) = default;
};

struct Measurements {
    double area = 0.0;
    double perimeter = 0.0;
    int components = 0;
    int holes = 0;
};

/// Default spurious-feature filter, in squared model units of unit-area shapes.
inline constexpr double kDefaultFeatureFilter = 1e-6;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a shape violates the ring/polygon invariants. `ring_index`
/// counts rings in storage order (outer, then holes, polygon by polygon).
class ValidationError : public GeometryError {
public:
    ValidationError(const std::string& what, std::size_t polygon, std::size_t ring, std::size_t ring_index)
        : GeometryError(what), polygon_(polygon), ring_(ring), ring_index_(ring_index) {}

    std::size_t polygon() const { return polygon_; }
    /// 0 is the outer ring, 1.. are holes.
    std::size_t ring() const { return ring_; }
    std::size_t ring_index() const { return ring_index_; }

private:
    std::size_t polygon_;
    std::size_t ring_;
    std::size_t ring_index_;
};

/// Reorients every ring (outer counterclockwise, holes clockwise).
Shape with_normalized_orientation(Shape shape);

/// Throws ValidationError when the shape breaks an invariant: fewer than three
/// vertices, repeated consecutive vertices, non-finite coordinates,
/// self-intersecting or zero-area rings, holes outside their outer ring,
/// overlapping holes or overlapping polygons. Orientation must already be
/// normalized.
void validate(const Shape& shape);

/// True when the ring has no self-intersections (touching included).
bool is_simple(const Ring& ring);

double area(const Shape& shape);
double perimeter(const Shape& shape);

Measurements measure(const Shape& shape, double min_feature_area = kDefaultFeatureFilter);

/// Area-weighted centroid; throws GeometryError for empty or zero-area shapes.
Point centroid(const Shape& shape);

/// p -> center + scale * (p - center) + translation for every vertex.
Shape transform(const Shape& shape, Vector translation, double scale, Point center = {});
Shape translate(const Shape& shape, Vector translation);

}  // namespace hausmorph
