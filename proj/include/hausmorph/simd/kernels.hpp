#pragma once

// Batched distance and containment kernels.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The public entry points dispatch at runtime to the best variant
// the CPU supports; the per-ISA functions stay reachable so tests can compare
// them. Both variants perform the same IEEE operations in the same order and
// are compiled without floating-point contraction, so their results agree
// bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hausmorph/shape.hpp"

namespace hausmorph::simd {

/// Structure-of-arrays segment set. Segment i runs from (x0[i], y0[i]) to
/// (x1[i], y1[i]); dx/dy/inv_len2 are cached for the distance kernels.
struct SegmentBatch {
    std::vector<double> x0, y0, x1, y1, dx, dy, inv_len2;

    std::size_t size() const { return x0.size(); }
    bool empty() const { return x0.empty(); }
    void add(Point a, Point b);

    /// All ring edges of the shape in storage order (polygon, outer ring
    /// then holes, vertex order).
    static SegmentBatch from_shape(const Shape& shape);
};

struct PointBatch {
    std::vector<double> x, y;

    std::size_t size() const { return x.size(); }
    void add(Point p) {
        x.push_back(p.x);
        y.push_back(p.y);
    }
};

struct Nearest {
    double distance2 = 0.0;
    std::size_t segment = 0;
    double t = 0.0;  ///< parameter along the segment in [0, 1]
};

enum class Isa { scalar, avx2 };

/// Best ISA for this CPU, unless overridden with force_isa or the
/// HAUSMORPH_SIMD environment variable ("scalar" or "avx2").
Isa active_isa();
void force_isa(Isa isa);
bool isa_supported(Isa isa);
const char* isa_name(Isa isa);

/// out[i] = squared distance from point i to the nearest segment.
void nearest_distance2(const PointBatch& points, const SegmentBatch& segments, std::span<double> out);

/// Nearest segment to one point. Ties resolve to the lowest segment index.
Nearest nearest_segment(Point p, const SegmentBatch& segments);

/// Even-odd crossing parity of a horizontal ray from each point; with all
/// ring edges of a shape this is point-in-shape (holes included). Points
/// exactly on an edge may land on either side.
void crossing_parity(const PointBatch& points, const SegmentBatch& segments, std::span<std::uint8_t> out);

/// Twice the signed area of the closed polygon (xs[i], ys[i]).
double shoelace2(std::span<const double> xs, std::span<const double> ys);

namespace scalar {
void nearest_distance2(const PointBatch& points, const SegmentBatch& segments, std::span<double> out);
Nearest nearest_segment(Point p, const SegmentBatch& segments);
void crossing_parity(const PointBatch& points, const SegmentBatch& segments, std::span<std::uint8_t> out);
double shoelace2(std::span<const double> xs, std::span<const double> ys);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void nearest_distance2(const PointBatch& points, const SegmentBatch& segments, std::span<double> out);
Nearest nearest_segment(Point p, const SegmentBatch& segments);
void crossing_parity(const PointBatch& points, const SegmentBatch& segments, std::span<std::uint8_t> out);
double shoelace2(std::span<const double> xs, std::span<const double> ys);
}  // namespace avx2
#endif

// Convenience wrappers over the dispatched kernels.

bool contains(const SegmentBatch& shape_edges, Point p);
double distance_to(const SegmentBatch& shape_edges, Point p);

}  // namespace hausmorph::simd
