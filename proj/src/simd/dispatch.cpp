#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "hausmorph/simd/kernels.hpp"

namespace hausmorph::simd {

void SegmentBatch::add(Point a, Point b) {
    x0.push_back(a.x);
    y0.push_back(a.y);
    x1.push_back(b.x);
    y1.push_back(b.y);
    const double ddx = b.x - a.x, ddy = b.y - a.y;
    dx.push_back(ddx);
    dy.push_back(ddy);
    const double len2 = ddx * ddx + ddy * ddy;
    inv_len2.push_back(len2 > 0 ? 1.0 / len2 : 0.0);
}

SegmentBatch SegmentBatch::from_shape(const Shape& shape) {
    SegmentBatch batch;
    auto add_ring = [&](const Ring& ring) {
        const auto& v = ring.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) batch.add(v[i], v[(i + 1) % v.size()]);
    };
    for (const auto& poly : shape.polygons) {
        add_ring(poly.outer);
        for (const auto& h : poly.holes) add_ring(h);
    }
    return batch;
}

namespace {

bool cpu_has_avx2() {
#if defined(HAUSMORPH_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect() {
    Isa best = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    if (const char* env = std::getenv("HAUSMORPH_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && best == Isa::avx2) return Isa::avx2;
    }
    return best;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool isa_supported(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

void force_isa(Isa isa) {
    if (isa_supported(isa)) current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

#if defined(HAUSMORPH_HAVE_AVX2_KERNELS)
#define HAUSMORPH_DISPATCH(call) (active_isa() == Isa::avx2 ? avx2::call : scalar::call)
#else
#define HAUSMORPH_DISPATCH(call) (scalar::call)
#endif

void nearest_distance2(const PointBatch& points, const SegmentBatch& segments, std::span<double> out) {
    HAUSMORPH_DISPATCH(nearest_distance2(points, segments, out));
}

Nearest nearest_segment(Point p, const SegmentBatch& segments) {
    return HAUSMORPH_DISPATCH(nearest_segment(p, segments));
}

void crossing_parity(const PointBatch& points, const SegmentBatch& segments, std::span<std::uint8_t> out) {
    HAUSMORPH_DISPATCH(crossing_parity(points, segments, out));
}

double shoelace2(std::span<const double> xs, std::span<const double> ys) {
    return HAUSMORPH_DISPATCH(shoelace2(xs, ys));
}

#undef HAUSMORPH_DISPATCH

bool contains(const SegmentBatch& shape_edges, Point p) {
    PointBatch one;
    one.add(p);
    std::uint8_t inside = 0;
    crossing_parity(one, shape_edges, {&inside, 1});
    return inside != 0;
}

double distance_to(const SegmentBatch& shape_edges, Point p) {
    if (shape_edges.empty()) return INFINITY;
    return std::sqrt(nearest_segment(p, shape_edges).distance2);
}

}  // namespace hausmorph::simd
