#pragma once

// Voronoi diagram of the boundary features (vertices and open edges) of a
// shape, with cells materialized as polygons. Parabolic cell boundaries are
// replaced by polylines whose chords deviate from the arc by at most the
// arc tolerance; both cells adjacent to an arc share the same polyline.

#include <span>
#include <vector>

#include "hausmorph/shape.hpp"
#include "hausmorph/site.hpp"

namespace hausmorph {

struct VoronoiCell {
    Site site;
    Ring boundary;  ///< counterclockwise
};

/// A finite Voronoi edge between two boundary features. Parabolic edges keep
/// their exact description (focus and directrix) next to the endpoints.
struct VoronoiEdge {
    Point p0, p1;
    bool parabolic = false;
    Point focus{};
    Point directrix_start{}, directrix_end{};
};

class SegmentVoronoi {
public:
    /// `region` must contain every point that will be queried against the
    /// diagram; cells are exact inside it. Throws GeometryError for an empty
    /// shape or non-positive tolerance.
    SegmentVoronoi(const Shape& shape, const Box& region, double arc_tolerance);

    std::span<const VoronoiCell> cells() const { return cells_; }
    std::span<const VoronoiEdge> edges() const { return edges_; }
    std::span<const Point> vertices() const { return vertices_; }

private:
    std::vector<VoronoiCell> cells_;
    std::vector<VoronoiEdge> edges_;
    std::vector<Point> vertices_;
};

}  // namespace hausmorph
