#include "hausmorph/morph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hausmorph/hausdorff.hpp"

namespace hausmorph {

namespace {

/// Scaled pieces that meet along a shared boundary can end up a few grid
/// units apart after rounding. A closing with a radius of 16 grid pitches
/// (relative to the pair's extent) welds them back together.
double weld_radius(const NormalizedPair& pair) {
    Box box = pair.a.bounds();
    box.expand(pair.b.bounds());
    const double extent = std::max({std::abs(box.min.x), std::abs(box.min.y), std::abs(box.max.x), std::abs(box.max.y)});
    int e = 0;
    std::frexp(extent > 0 ? extent : 1.0, &e);
    return std::ldexp(1.0, e - 25);
}

constexpr int kWeldSegments = 8;

}  // namespace

const char* to_string(Method m) {
    switch (m) {
        case Method::dilation: return "dilation";
        case Method::voronoi: return "voronoi";
        case Method::mixed: return "mixed";
    }
    return "?";
}

const char* to_string(Alignment a) { return a == Alignment::centroid ? "centroid" : "none"; }

const char* to_string(Scaling s) {
    switch (s) {
        case Scaling::equal_area: return "equal-area";
        case Scaling::unit_area: return "unit-area";
        case Scaling::none: return "none";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "dilation") return Method::dilation;
    if (name == "voronoi") return Method::voronoi;
    if (name == "mixed") return Method::mixed;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

Alignment parse_alignment(std::string_view name) {
    if (name == "centroid") return Alignment::centroid;
    if (name == "none") return Alignment::none;
    throw std::invalid_argument("unknown alignment '" + std::string(name) + "'");
}

Scaling parse_scaling(std::string_view name) {
    if (name == "equal-area") return Scaling::equal_area;
    if (name == "unit-area") return Scaling::unit_area;
    if (name == "none") return Scaling::none;
    throw std::invalid_argument("unknown scaling '" + std::string(name) + "'");
}

void check(const MorphParams& params) {
    if (!(params.alpha >= 0.0 && params.alpha <= 1.0))
        throw GeometryError("alpha must lie in [0, 1], got " + std::to_string(params.alpha));
    if (!(params.phi >= 0.0) || !std::isfinite(params.phi)) throw GeometryError("phi must be >= 0");
    check(DiskApprox{0.0, params.disk_segments});
    if (!(params.arc_tolerance > 0.0)) throw GeometryError("arc tolerance must be positive");
}

NormalizedPair normalize_pair(const Shape& a, const Shape& b, Alignment align, Scaling scale) {
    if (a.empty() || b.empty()) throw GeometryError("cannot normalize an empty shape");
    const double area_a = area(a), area_b = area(b);
    if (!(area_a > 0.0) || !(area_b > 0.0)) throw GeometryError("cannot normalize a zero-area shape");

    NormalizedPair pair;
    switch (scale) {
        case Scaling::equal_area: {
            const double target = std::sqrt(area_a * area_b);
            pair.scale_a = std::sqrt(target / area_a);
            pair.scale_b = std::sqrt(target / area_b);
            break;
        }
        case Scaling::unit_area:
            pair.scale_a = 1.0 / std::sqrt(area_a);
            pair.scale_b = 1.0 / std::sqrt(area_b);
            break;
        case Scaling::none: break;
    }
    const Point ca = centroid(a), cb = centroid(b);
    if (align == Alignment::centroid) {
        pair.translation_a = Point{} - ca;
        pair.translation_b = Point{} - cb;
    }
    pair.a = transform(a, pair.translation_a, pair.scale_a, ca);
    pair.b = transform(b, pair.translation_b, pair.scale_b, cb);
    pair.h = hausdorff(pair.a, pair.b).distance;
    return pair;
}

NormalizedPair as_pair(const Shape& a, const Shape& b) {
    NormalizedPair pair;
    pair.a = a;
    pair.b = b;
    pair.h = hausdorff(a, b).distance;
    return pair;
}

PairMorpher::PairMorpher(NormalizedPair pair, int disk_segments, double arc_tolerance)
    : pair_(std::move(pair)), segments_(disk_segments), arc_tolerance_(arc_tolerance) {
    check(MorphParams{0.0, 0.0, disk_segments, arc_tolerance});
}

void PairMorpher::check_alpha(double alpha) const { check(MorphParams{alpha, 0.0, segments_, arc_tolerance_}); }

const Partition& PairMorpher::forward() {
    if (!forward_) forward_ = build_partition(pair_.a, pair_.b, arc_tolerance_);
    return *forward_;
}

const Partition& PairMorpher::backward() {
    if (!backward_) backward_ = build_partition(pair_.b, pair_.a, arc_tolerance_);
    return *backward_;
}

const Shape& PairMorpher::dilation(double alpha) {
    check_alpha(alpha);
    if (auto it = dilation_cache_.find(alpha); it != dilation_cache_.end()) return it->second;
    Shape result;
    // The polygonal disk under-approximates, so the generic formula would
    // shave the inputs slightly at the endpoints.
    if (alpha == 0.0 || pair_.h == 0.0) {
        // h = 0 means both inputs cover the same region.
        result = pair_.a;
    } else if (alpha == 1.0) {
        result = pair_.b;
    } else {
        const double h = pair_.h;
        result = intersect(dilate(pair_.a, {alpha * h, segments_}), dilate(pair_.b, {(1.0 - alpha) * h, segments_}));
    }
    return dilation_cache_.emplace(alpha, std::move(result)).first->second;
}

const Shape& PairMorpher::voronoi(double alpha) {
    check_alpha(alpha);
    if (auto it = voronoi_cache_.find(alpha); it != voronoi_cache_.end()) return it->second;
    Shape result;
    if (alpha == 0.0) {
        result = pair_.a;
    } else if (alpha == 1.0) {
        result = pair_.b;
    } else {
        std::vector<Shape> parts;
        auto add = [&](const Partition& partition, double fraction, bool skip_interior) {
            for (const Piece& piece : partition.pieces) {
                if (skip_interior && piece.site.kind == SiteKind::interior) continue;
                if (auto scaled = scale_piece(piece, fraction)) parts.push_back(Shape{{std::move(*scaled)}});
            }
        };
        add(forward(), alpha, false);
        // Interior pieces of both partitions cover the same region a n b.
        add(backward(), 1.0 - alpha, true);
        result = closing(unite_all(std::move(parts)), {weld_radius(pair_), kWeldSegments});
    }
    return voronoi_cache_.emplace(alpha, std::move(result)).first->second;
}

Shape PairMorpher::mixed(double alpha, double phi) {
    check(MorphParams{alpha, phi, segments_, arc_tolerance_});
    const Shape& t = voronoi(alpha);
    if (phi == 0.0) return t;
    return intersect(closing(t, {phi, segments_}), dilation(alpha));
}

Shape PairMorpher::evaluate(Method method, double alpha, double phi) {
    switch (method) {
        case Method::dilation: return dilation(alpha);
        case Method::voronoi: return voronoi(alpha);
        case Method::mixed: return mixed(alpha, phi);
    }
    throw GeometryError("unknown morph method");
}

MorphResult morph(const NormalizedPair& pair, Method method, const MorphParams& params) {
    check(params);
    PairMorpher morpher(pair, params.disk_segments, params.arc_tolerance);
    MorphResult result;
    result.shape = morpher.evaluate(method, params.alpha, params.phi);
    result.method = method;
    result.params = params;
    result.h = pair.h;
    return result;
}

MorphResult dilation_morph(const NormalizedPair& pair, const MorphParams& params) {
    return morph(pair, Method::dilation, params);
}

MorphResult voronoi_morph(const NormalizedPair& pair, const MorphParams& params) {
    return morph(pair, Method::voronoi, params);
}

MorphResult mixed_morph(const NormalizedPair& pair, const MorphParams& params) {
    return morph(pair, Method::mixed, params);
}

MorphResult morph_translated(const Shape& a, const Shape& b, Vector t, Method method, const MorphParams& params) {
    MorphResult result = morph(as_pair(a, b), method, params);
    if (t.x != 0.0 || t.y != 0.0) result.shape = translate(result.shape, params.alpha * t);
    return result;
}

}  // namespace hausmorph
