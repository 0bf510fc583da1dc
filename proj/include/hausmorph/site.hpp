#pragma once

#include "hausmorph/shape.hpp"

namespace hausmorph {

enum class SiteKind { vertex, edge, interior };

/// A feature of a shape that can be the closest element for points of the
/// other shape: a vertex, an open edge, or the interior.
struct Site {
    SiteKind kind = SiteKind::interior;
    Point vertex{};      ///< for SiteKind::vertex
    Point edge_start{};  ///< for SiteKind::edge
    Point edge_end{};

    static Site at_vertex(Point v) { return {SiteKind::vertex, v, {}, {}}; }
    static Site on_edge(Point a, Point b) { return {SiteKind::edge, {}, a, b}; }
    static Site interior() { return {}; }

    /// Where `p` moves when fully contracted onto the site: the vertex, the
    /// orthogonal projection onto the edge's supporting line, or p itself.
    Point anchor(Point p) const {
        switch (kind) {
            case SiteKind::vertex:
                return vertex;
            case SiteKind::edge: {
                const Vector d = edge_end - edge_start;
                const double t = dot(p - edge_start, d) / dot(d, d);
                return edge_start + t * d;
            }
            case SiteKind::interior:
                break;
        }
        return p;
    }

    friend bool operator==(const Site&, const Site&) = default;
};

const char* to_string(SiteKind kind);

}  // namespace hausmorph
