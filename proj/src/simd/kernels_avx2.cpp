// AVX2 kernels; this translation unit is built with -mavx2 and is only
// entered after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "hausmorph/simd/kernels.hpp"

namespace hausmorph::simd::avx2 {

namespace {

inline __m256d segment_distance2(__m256d px, __m256d py, const SegmentBatch& s, std::size_t j) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d dx = _mm256_set1_pd(s.dx[j]);
    const __m256d dy = _mm256_set1_pd(s.dy[j]);
    const __m256d ex = _mm256_sub_pd(px, _mm256_set1_pd(s.x0[j]));
    const __m256d ey = _mm256_sub_pd(py, _mm256_set1_pd(s.y0[j]));
    __m256d t = _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(ex, dx), _mm256_mul_pd(ey, dy)),
                              _mm256_set1_pd(s.inv_len2[j]));
    t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
    const __m256d qx = _mm256_sub_pd(ex, _mm256_mul_pd(t, dx));
    const __m256d qy = _mm256_sub_pd(ey, _mm256_mul_pd(t, dy));
    return _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
}

}  // namespace

void nearest_distance2(const PointBatch& points, const SegmentBatch& segments, std::span<double> out) {
    const std::size_t n = points.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d px = _mm256_loadu_pd(points.x.data() + i);
        const __m256d py = _mm256_loadu_pd(points.y.data() + i);
        __m256d best = _mm256_set1_pd(INFINITY);
        for (std::size_t j = 0; j < segments.size(); ++j)
            best = _mm256_min_pd(best, segment_distance2(px, py, segments, j));
        _mm256_storeu_pd(out.data() + i, best);
    }
    if (i < n) {
        PointBatch tail;
        tail.x.assign(points.x.begin() + static_cast<std::ptrdiff_t>(i), points.x.end());
        tail.y.assign(points.y.begin() + static_cast<std::ptrdiff_t>(i), points.y.end());
        scalar::nearest_distance2(tail, segments, out.subspan(i));
    }
}

Nearest nearest_segment(Point p, const SegmentBatch& segments) {
    const std::size_t m = segments.size();
    if (m < 8) return scalar::nearest_segment(p, segments);

    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d px = _mm256_set1_pd(p.x);
    const __m256d py = _mm256_set1_pd(p.y);
    __m256d best = _mm256_set1_pd(INFINITY);
    __m256d best_index = _mm256_setzero_pd();
    __m256d index = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    const __m256d four = _mm256_set1_pd(4.0);
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d dx = _mm256_loadu_pd(segments.dx.data() + j);
        const __m256d dy = _mm256_loadu_pd(segments.dy.data() + j);
        const __m256d ex = _mm256_sub_pd(px, _mm256_loadu_pd(segments.x0.data() + j));
        const __m256d ey = _mm256_sub_pd(py, _mm256_loadu_pd(segments.y0.data() + j));
        __m256d t = _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(ex, dx), _mm256_mul_pd(ey, dy)),
                                  _mm256_loadu_pd(segments.inv_len2.data() + j));
        t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
        const __m256d qx = _mm256_sub_pd(ex, _mm256_mul_pd(t, dx));
        const __m256d qy = _mm256_sub_pd(ey, _mm256_mul_pd(t, dy));
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
        const __m256d closer = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
        best = _mm256_blendv_pd(best, d2, closer);
        best_index = _mm256_blendv_pd(best_index, index, closer);
        index = _mm256_add_pd(index, four);
    }
    alignas(32) double lane_d2[4];
    alignas(32) double lane_index[4];
    _mm256_store_pd(lane_d2, best);
    _mm256_store_pd(lane_index, best_index);

    Nearest result{INFINITY, 0, 0.0};
    for (int l = 0; l < 4; ++l) {
        const auto idx = static_cast<std::size_t>(lane_index[l]);
        if (lane_d2[l] < result.distance2 || (lane_d2[l] == result.distance2 && idx < result.segment))
            result = {lane_d2[l], idx, 0.0};
    }
    for (; j < m; ++j) {
        const double ex = p.x - segments.x0[j];
        const double ey = p.y - segments.y0[j];
        double t = (ex * segments.dx[j] + ey * segments.dy[j]) * segments.inv_len2[j];
        t = std::min(std::max(t, 0.0), 1.0);
        const double qx = ex - t * segments.dx[j];
        const double qy = ey - t * segments.dy[j];
        const double d2 = qx * qx + qy * qy;
        if (d2 < result.distance2) result = {d2, j, 0.0};
    }
    const std::size_t k = result.segment;
    const double t =
        ((p.x - segments.x0[k]) * segments.dx[k] + (p.y - segments.y0[k]) * segments.dy[k]) * segments.inv_len2[k];
    result.t = std::min(std::max(t, 0.0), 1.0);
    return result;
}

void crossing_parity(const PointBatch& points, const SegmentBatch& segments, std::span<std::uint8_t> out) {
    const std::size_t n = points.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d px = _mm256_loadu_pd(points.x.data() + i);
        const __m256d py = _mm256_loadu_pd(points.y.data() + i);
        __m256d parity = _mm256_setzero_pd();
        for (std::size_t j = 0; j < segments.size(); ++j) {
            const __m256d y0 = _mm256_set1_pd(segments.y0[j]);
            const __m256d y1 = _mm256_set1_pd(segments.y1[j]);
            const __m256d above0 = _mm256_cmp_pd(y0, py, _CMP_GT_OQ);
            const __m256d above1 = _mm256_cmp_pd(y1, py, _CMP_GT_OQ);
            const __m256d straddles = _mm256_xor_pd(above0, above1);
            if (_mm256_movemask_pd(straddles) == 0) continue;
            const __m256d x0 = _mm256_set1_pd(segments.x0[j]);
            const __m256d xint = _mm256_add_pd(
                _mm256_div_pd(_mm256_mul_pd(_mm256_set1_pd(segments.x1[j] - segments.x0[j]), _mm256_sub_pd(py, y0)),
                              _mm256_sub_pd(y1, y0)),
                x0);
            const __m256d left = _mm256_cmp_pd(px, xint, _CMP_LT_OQ);
            parity = _mm256_xor_pd(parity, _mm256_and_pd(straddles, left));
        }
        const int mask = _mm256_movemask_pd(parity);
        for (int l = 0; l < 4; ++l) out[i + static_cast<std::size_t>(l)] = static_cast<std::uint8_t>((mask >> l) & 1);
    }
    if (i < n) {
        PointBatch tail;
        tail.x.assign(points.x.begin() + static_cast<std::ptrdiff_t>(i), points.x.end());
        tail.y.assign(points.y.begin() + static_cast<std::ptrdiff_t>(i), points.y.end());
        scalar::crossing_parity(tail, segments, out.subspan(i));
    }
}

double shoelace2(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n < 3) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 < n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs.data() + i);
        const __m256d y = _mm256_loadu_pd(ys.data() + i);
        const __m256d xn = _mm256_loadu_pd(xs.data() + i + 1);
        const __m256d yn = _mm256_loadu_pd(ys.data() + i + 1);
        acc = _mm256_add_pd(acc, _mm256_sub_pd(_mm256_mul_pd(x, yn), _mm256_mul_pd(xn, y)));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double tail = 0.0;
    for (; i < n; ++i) {
        const std::size_t k = (i + 1 == n) ? 0 : i + 1;
        tail += xs[i] * ys[k] - xs[k] * ys[i];
    }
    return ((lane[0] + lane[1]) + (lane[2] + lane[3])) + tail;
}

}  // namespace hausmorph::simd::avx2
