#include "hausmorph/partition.hpp"

#include <charconv>
#include <sstream>

#include "hausmorph/boolean.hpp"
#include "hausmorph/io.hpp"
#include "hausmorph/segment_voronoi.hpp"
#include "hausmorph/simd/kernels.hpp"
#include "hausmorph/wkt.hpp"

namespace hausmorph {

std::vector<Site> feature_sites(const Shape& shape) {
    std::vector<Site> vertices, edges;
    auto add_ring = [&](const Ring& ring) {
        const auto& v = ring.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            vertices.push_back(Site::at_vertex(v[i]));
            edges.push_back(Site::on_edge(v[i], v[(i + 1) % v.size()]));
        }
    };
    for (const auto& poly : shape.polygons) {
        add_ring(poly.outer);
        for (const auto& h : poly.holes) add_ring(h);
    }
    std::vector<Site> sites = std::move(vertices);
    sites.insert(sites.end(), edges.begin(), edges.end());
    sites.push_back(Site::interior());
    return sites;
}

Partition build_partition(const Shape& source, const Shape& target, double arc_tolerance) {
    if (source.empty() || target.empty()) throw GeometryError("partition of an empty shape");
    if (!(arc_tolerance > 0)) throw GeometryError("arc tolerance must be positive");

    Partition partition;
    partition.arc_tolerance = arc_tolerance;

    for (auto& poly : intersect(source, target).polygons)
        if (poly.area() > kSliverArea) partition.pieces.push_back({std::move(poly), Site::interior()});

    const Shape outside = difference(source, target);
    if (outside.empty()) return partition;

    Box region = source.bounds();
    region.expand(target.bounds());
    const SegmentVoronoi voronoi(target, region, arc_tolerance);

    std::vector<Box> outside_boxes;
    for (const auto& poly : outside.polygons) outside_boxes.push_back(poly.bounds());

    for (const auto& cell : voronoi.cells()) {
        const Box cell_box = cell.boundary.bounds();
        const Shape cell_shape{{PolygonWithHoles{cell.boundary, {}}}};
        for (std::size_t i = 0; i < outside.polygons.size(); ++i) {
            if (!cell_box.overlaps(outside_boxes[i])) continue;
            for (auto& poly : intersect(Shape{{outside.polygons[i]}}, cell_shape).polygons)
                if (poly.area() > kSliverArea) partition.pieces.push_back({std::move(poly), cell.site});
        }
    }
    return partition;
}

Point scale_point(const Site& site, Point p, double alpha) { return p + alpha * (site.anchor(p) - p); }

std::optional<PolygonWithHoles> scale_piece(const Piece& piece, double alpha) {
    if (piece.site.kind == SiteKind::interior || alpha == 0.0) return piece.geometry;
    if (alpha >= 1.0) return std::nullopt;
    PolygonWithHoles out = piece.geometry;
    auto map = [&](Ring& ring) {
        for (Point& p : ring.vertices) p = scale_point(piece.site, p, alpha);
    };
    map(out.outer);
    for (auto& h : out.holes) map(h);
    if (!(out.outer.signed_area() > 0.0) || !(out.area() > 0.0)) return std::nullopt;
    return out;
}

Point closest_point(Point p, const Shape& shape) {
    if (shape.empty()) throw GeometryError("closest point on an empty shape");
    const auto edges = simd::SegmentBatch::from_shape(shape);
    if (simd::contains(edges, p)) return p;
    const simd::Nearest near = simd::nearest_segment(p, edges);
    const std::size_t j = near.segment;
    return {edges.x0[j] + near.t * edges.dx[j], edges.y0[j] + near.t * edges.dy[j]};
}

std::string describe_sites(const Partition& partition) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < partition.pieces.size(); ++i) {
        const Site& s = partition.pieces[i].site;
        out << i << ' ' << to_string(s.kind);
        if (s.kind == SiteKind::vertex) out << ' ' << s.vertex.x << ' ' << s.vertex.y;
        if (s.kind == SiteKind::edge)
            out << ' ' << s.edge_start.x << ' ' << s.edge_start.y << ' ' << s.edge_end.x << ' ' << s.edge_end.y;
        out << '\n';
    }
    return out.str();
}

void write_partition_dump(const Partition& partition, const std::string& wkt_path, const std::string& sites_path) {
    // Pieces share boundaries, so they are emitted as-is rather than unioned.
    std::string wkt;
    if (partition.pieces.empty()) {
        wkt = "MULTIPOLYGON EMPTY";
    } else {
        Shape all;
        for (const auto& piece : partition.pieces) all.polygons.push_back(piece.geometry);
        wkt = emit_wkt(all);
        if (all.polygons.size() == 1) wkt = "MULTIPOLYGON(" + wkt.substr(std::string("POLYGON").size()) + ")";
    }
    write_file_atomic(wkt_path, wkt + "\n");
    write_file_atomic(sites_path, describe_sites(partition));
}

}  // namespace hausmorph
