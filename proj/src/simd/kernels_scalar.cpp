// Scalar reference kernels. The AVX2 variants mirror these operation for
// operation; keep the two files in step.

#include <algorithm>

#include "hausmorph/simd/kernels.hpp"

namespace hausmorph::simd::scalar {

namespace {

inline double segment_distance2(double px, double py, const SegmentBatch& s, std::size_t j) {
    const double ex = px - s.x0[j];
    const double ey = py - s.y0[j];
    double t = (ex * s.dx[j] + ey * s.dy[j]) * s.inv_len2[j];
    t = std::min(std::max(t, 0.0), 1.0);
    const double qx = ex - t * s.dx[j];
    const double qy = ey - t * s.dy[j];
    return qx * qx + qy * qy;
}

}  // namespace

void nearest_distance2(const PointBatch& points, const SegmentBatch& segments, std::span<double> out) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        double best = INFINITY;
        for (std::size_t j = 0; j < segments.size(); ++j) {
            const double d2 = segment_distance2(points.x[i], points.y[i], segments, j);
            best = best < d2 ? best : d2;
        }
        out[i] = best;
    }
}

Nearest nearest_segment(Point p, const SegmentBatch& segments) {
    Nearest best{INFINITY, 0, 0.0};
    for (std::size_t j = 0; j < segments.size(); ++j) {
        const double d2 = segment_distance2(p.x, p.y, segments, j);
        if (d2 < best.distance2) best = {d2, j, 0.0};
    }
    if (!segments.empty()) {
        const std::size_t j = best.segment;
        const double t = ((p.x - segments.x0[j]) * segments.dx[j] + (p.y - segments.y0[j]) * segments.dy[j]) *
                         segments.inv_len2[j];
        best.t = std::min(std::max(t, 0.0), 1.0);
    }
    return best;
}

void crossing_parity(const PointBatch& points, const SegmentBatch& segments, std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double px = points.x[i], py = points.y[i];
        std::uint8_t inside = 0;
        for (std::size_t j = 0; j < segments.size(); ++j) {
            const double y0 = segments.y0[j], y1 = segments.y1[j];
            if ((y0 > py) != (y1 > py)) {
                const double xint = (segments.x1[j] - segments.x0[j]) * (py - y0) / (y1 - y0) + segments.x0[j];
                if (px < xint) inside ^= 1;
            }
        }
        out[i] = inside;
    }
}

double shoelace2(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n < 3) return 0.0;
    // Four interleaved partial sums, matching the vector lanes.
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 < n; i += 4)
        for (std::size_t l = 0; l < 4; ++l) lane[l] += xs[i + l] * ys[i + l + 1] - xs[i + l + 1] * ys[i + l];
    double tail = 0.0;
    for (; i < n; ++i) {
        const std::size_t k = (i + 1 == n) ? 0 : i + 1;
        tail += xs[i] * ys[k] - xs[k] * ys[i];
    }
    return ((lane[0] + lane[1]) + (lane[2] + lane[3])) + tail;
}

}  // namespace hausmorph::simd::scalar
