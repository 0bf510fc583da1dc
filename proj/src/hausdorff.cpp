#include "hausmorph/hausdorff.hpp"

#include <algorithm>
#include <cmath>

#include "hausmorph/partition.hpp"
#include "hausmorph/segment_voronoi.hpp"
#include "hausmorph/simd/kernels.hpp"

namespace hausmorph {

namespace {

/// Parameters t in [0, 1] where segment q0 -> q1 meets the parabolic edge.
void parabola_crossings(const VoronoiEdge& e, Point q0, Point q1, std::vector<Point>& out) {
    const Vector dir = e.directrix_end - e.directrix_start;
    const Vector u = (1.0 / norm(dir)) * dir;
    Vector n{-u.y, u.x};
    double fy = dot(e.focus - e.directrix_start, n);
    if (fy < 0) {
        n = -n;
        fy = -fy;
    }
    if (!(fy > 0)) return;
    const double fx = dot(e.focus - e.directrix_start, u);
    auto local_x = [&](Point p) { return dot(p - e.directrix_start, u); };
    auto local_y = [&](Point p) { return dot(p - e.directrix_start, n); };
    const double xa = local_x(e.p0), xb = local_x(e.p1);
    const double lo = std::min(xa, xb), hi = std::max(xa, xb);

    const double X0 = local_x(q0) - fx, Y0 = local_y(q0);
    const double DX = local_x(q1) - local_x(q0), DY = local_y(q1) - Y0;
    // (X0 + t DX)^2 + fy^2 = 2 fy (Y0 + t DY)
    const double A = DX * DX;
    const double B = 2.0 * X0 * DX - 2.0 * fy * DY;
    const double C = X0 * X0 + fy * fy - 2.0 * fy * Y0;
    double roots[2];
    int count = 0;
    if (std::abs(A) < 1e-300) {
        if (B != 0.0) roots[count++] = -C / B;
    } else {
        const double disc = B * B - 4.0 * A * C;
        if (disc < 0) return;
        const double sq = std::sqrt(disc);
        // Numerically stable pair of roots.
        const double qq = -0.5 * (B + std::copysign(sq, B));
        roots[count++] = qq / A;
        if (qq != 0.0) roots[count++] = C / qq;
    }
    const Vector d = q1 - q0;
    for (int i = 0; i < count; ++i) {
        const double t = roots[i];
        if (!(t >= 0.0 && t <= 1.0)) continue;
        const double x = X0 + fx + t * DX;
        if (x < lo || x > hi) continue;
        out.push_back(q0 + t * d);
    }
}

void linear_crossing(Point p0, Point p1, Point q0, Point q1, std::vector<Point>& out) {
    const Vector r = p1 - p0, s = q1 - q0;
    const double denom = cross(r, s);
    if (denom == 0.0) return;
    const Vector w = q0 - p0;
    const double t = cross(w, s) / denom;
    const double v = cross(w, r) / denom;
    if (t < 0.0 || t > 1.0 || v < 0.0 || v > 1.0) return;
    out.push_back(p0 + t * r);
}

struct EdgeRef {
    Point a, b;
    double xmin, xmax, ymin, ymax;
};

std::vector<EdgeRef> ring_edges(const Shape& shape) {
    std::vector<EdgeRef> edges;
    auto add = [&](const Ring& ring) {
        const auto& v = ring.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point a = v[i], b = v[(i + 1) % v.size()];
            edges.push_back({a, b, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)});
        }
    };
    for (const auto& poly : shape.polygons) {
        add(poly.outer);
        for (const auto& h : poly.holes) add(h);
    }
    return edges;
}

}  // namespace

HausdorffResult directed_hausdorff(const Shape& a, const Shape& b) {
    if (a.empty() || b.empty()) throw GeometryError("Hausdorff distance with an empty shape");

    Box region = a.bounds();
    region.expand(b.bounds());
    const SegmentVoronoi voronoi(b, region, kDefaultArcTolerance);

    const auto a_edges_soa = simd::SegmentBatch::from_shape(a);
    const auto b_edges_soa = simd::SegmentBatch::from_shape(b);

    std::vector<Point> candidates;
    for (const auto& poly : a.polygons) {
        candidates.insert(candidates.end(), poly.outer.vertices.begin(), poly.outer.vertices.end());
        for (const auto& h : poly.holes) candidates.insert(candidates.end(), h.vertices.begin(), h.vertices.end());
    }

    {
        simd::PointBatch vv;
        for (Point p : voronoi.vertices()) vv.add(p);
        std::vector<std::uint8_t> inside(vv.size());
        simd::crossing_parity(vv, a_edges_soa, inside);
        for (std::size_t i = 0; i < vv.size(); ++i)
            if (inside[i]) candidates.push_back(voronoi.vertices()[i]);
    }

    const auto a_edges = ring_edges(a);
    for (const auto& ve : voronoi.edges()) {
        if (ve.parabolic) {
            for (const auto& ae : a_edges) parabola_crossings(ve, ae.a, ae.b, candidates);
            continue;
        }
        const double xmin = std::min(ve.p0.x, ve.p1.x), xmax = std::max(ve.p0.x, ve.p1.x);
        const double ymin = std::min(ve.p0.y, ve.p1.y), ymax = std::max(ve.p0.y, ve.p1.y);
        for (const auto& ae : a_edges) {
            if (ae.xmax < xmin || ae.xmin > xmax || ae.ymax < ymin || ae.ymin > ymax) continue;
            linear_crossing(ae.a, ae.b, ve.p0, ve.p1, candidates);
        }
    }

    simd::PointBatch batch;
    for (Point p : candidates) batch.add(p);
    std::vector<std::uint8_t> inside(batch.size());
    std::vector<double> d2(batch.size());
    simd::crossing_parity(batch, b_edges_soa, inside);
    simd::nearest_distance2(batch, b_edges_soa, d2);

    // Crossings computed at b's own vertices land a rounding error off b;
    // squared distances below this floor count as zero.
    Box extent = a.bounds();
    extent.expand(b.bounds());
    const double floor2 = std::pow(1e-13 * extent.diagonal(), 2);

    std::size_t best = 0;
    double best_d2 = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double v = inside[i] || d2[i] <= floor2 ? 0.0 : d2[i];
        if (v > best_d2 || (v == best_d2 && lex_less(candidates[i], candidates[best]))) {
            best = i;
            best_d2 = v;
        }
    }
    HausdorffResult result;
    result.witness_source = candidates[best];
    if (best_d2 <= 0.0) {
        result.witness_target = result.witness_source;
        return result;
    }
    const simd::Nearest near = simd::nearest_segment(result.witness_source, b_edges_soa);
    const std::size_t j = near.segment;
    result.witness_target = {b_edges_soa.x0[j] + near.t * b_edges_soa.dx[j],
                             b_edges_soa.y0[j] + near.t * b_edges_soa.dy[j]};
    result.distance = std::sqrt(best_d2);
    return result;
}

HausdorffResult hausdorff(const Shape& a, const Shape& b) {
    const HausdorffResult ab = directed_hausdorff(a, b);
    const HausdorffResult ba = directed_hausdorff(b, a);
    return ba.distance > ab.distance ? ba : ab;
}

double directed_hausdorff_oracle(const Shape& a, const Shape& b, double spacing) {
    if (!(spacing > 0)) throw GeometryError("oracle spacing must be positive");
    if (a.empty()) return 0.0;
    if (b.empty()) return INFINITY;

    const auto a_edges = simd::SegmentBatch::from_shape(a);
    const auto b_edges = simd::SegmentBatch::from_shape(b);

    simd::PointBatch samples;
    for (std::size_t j = 0; j < a_edges.size(); ++j) {
        const Point p0{a_edges.x0[j], a_edges.y0[j]};
        const Vector d{a_edges.dx[j], a_edges.dy[j]};
        const auto steps = static_cast<std::size_t>(std::ceil(norm(d) / spacing));
        for (std::size_t k = 0; k < std::max<std::size_t>(steps, 1); ++k)
            samples.add(p0 + (static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(steps, 1))) * d);
    }

    const Box box = a.bounds();
    simd::PointBatch grid;
    for (double y = box.min.y + 0.5 * spacing; y < box.max.y; y += spacing)
        for (double x = box.min.x + 0.5 * spacing; x < box.max.x; x += spacing) grid.add({x, y});
    std::vector<std::uint8_t> in_a(grid.size());
    simd::crossing_parity(grid, a_edges, in_a);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (in_a[i]) samples.add({grid.x[i], grid.y[i]});

    std::vector<std::uint8_t> in_b(samples.size());
    std::vector<double> d2(samples.size());
    simd::crossing_parity(samples, b_edges, in_b);
    simd::nearest_distance2(samples, b_edges, d2);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (!in_b[i]) worst = std::max(worst, d2[i]);
    return std::sqrt(worst);
}

double hausdorff_oracle(const Shape& a, const Shape& b, double spacing) {
    return std::max(directed_hausdorff_oracle(a, b, spacing), directed_hausdorff_oracle(b, a, spacing));
}

}  // namespace hausmorph
