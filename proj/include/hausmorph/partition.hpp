#pragma once

// Partition of one shape by the Voronoi diagram of the other shape's
// features, and the per-piece contraction maps that drive the Voronoi morph.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hausmorph/shape.hpp"
#include "hausmorph/site.hpp"

namespace hausmorph {

inline constexpr double kDefaultArcTolerance = 1e-4;
/// Pieces below this area are dropped as numerical slivers.
inline constexpr double kSliverArea = 1e-12;

/// A region of the source shape whose closest feature of the target shape is
/// `site`.
struct Piece {
    PolygonWithHoles geometry;
    Site site;
};

struct Partition {
    std::vector<Piece> pieces;
    double arc_tolerance = kDefaultArcTolerance;
};

/// One vertex and one edge site per ring vertex, plus a single interior site.
std::vector<Site> feature_sites(const Shape& shape);

/// Splits `source` into pieces: the parts inside `target` carry the interior
/// site, the rest is cut by the Voronoi cells of the target's vertices and
/// open edges. Throws GeometryError for empty inputs or a non-positive
/// tolerance.
Partition build_partition(const Shape& source, const Shape& target, double arc_tolerance = kDefaultArcTolerance);

/// Moves the piece a fraction `alpha` of the way towards its site: uniform
/// scaling about a vertex site, scaling perpendicular to the supporting line
/// of an edge site, identity for the interior. Returns nullopt when the image
/// has no area.
std::optional<PolygonWithHoles> scale_piece(const Piece& piece, double alpha);

/// The image of a single point under the same map.
Point scale_point(const Site& site, Point p, double alpha);

/// p itself when p lies in the shape, otherwise the nearest boundary point.
/// Equidistant candidates resolve to the lowest (ring, position) in storage
/// order. Throws GeometryError for an empty shape.
Point closest_point(Point p, const Shape& shape);

/// Writes the pieces as one MULTIPOLYGON line and a sidecar listing, one line
/// per piece: index, site kind and site coordinates.
void write_partition_dump(const Partition& partition, const std::string& wkt_path, const std::string& sites_path);
std::string describe_sites(const Partition& partition);

}  // namespace hausmorph
