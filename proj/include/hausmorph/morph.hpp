#pragma once

// The three Hausdorff morphs between two shapes: dilation (S), Voronoi (T)
// and mixed (M), plus pair normalization.

#include <map>
#include <optional>
#include <string_view>

#include "hausmorph/boolean.hpp"
#include "hausmorph/partition.hpp"
#include "hausmorph/shape.hpp"

namespace hausmorph {

enum class Method { dilation, voronoi, mixed };
enum class Alignment { centroid, none };
/// equal_area scales both shapes to the geometric mean of their areas;
/// unit_area scales both to area 1.
enum class Scaling { equal_area, unit_area, none };

const char* to_string(Method m);
const char* to_string(Alignment a);
const char* to_string(Scaling s);
/// Throw std::invalid_argument on unknown names.
Method parse_method(std::string_view name);
Alignment parse_alignment(std::string_view name);
Scaling parse_scaling(std::string_view name);

struct MorphParams {
    double alpha = 0.0;
    double phi = 0.0;  ///< closing radius, mixed morph only
    int disk_segments = kDefaultDiskSegments;
    double arc_tolerance = kDefaultArcTolerance;
};

/// Throws GeometryError unless alpha is in [0, 1], phi >= 0, the segment
/// count is even and >= 8 and the arc tolerance is positive.
void check(const MorphParams& params);

struct NormalizedPair {
    Shape a, b;
    double h = 0.0;  ///< Hausdorff distance of the normalized shapes
    Vector translation_a{}, translation_b{};
    double scale_a = 1.0, scale_b = 1.0;
};

/// Scales each shape about its own centroid, then (for centroid alignment)
/// translates both centroids to the origin. Throws GeometryError for empty or
/// zero-area input.
NormalizedPair normalize_pair(const Shape& a, const Shape& b, Alignment align, Scaling scale);

/// Pair taken as given; only h is computed.
NormalizedPair as_pair(const Shape& a, const Shape& b);

struct MorphResult {
    Shape shape;
    Method method = Method::voronoi;
    MorphParams params;
    double h = 0.0;
};

/// (a + D(alpha h)) intersected with (b + D((1 - alpha) h)). The endpoints
/// return the inputs unchanged.
MorphResult dilation_morph(const NormalizedPair& pair, const MorphParams& params);

/// Union of both partitions with their pieces pulled towards their sites.
MorphResult voronoi_morph(const NormalizedPair& pair, const MorphParams& params);

/// closing(T, phi) intersected with S.
MorphResult mixed_morph(const NormalizedPair& pair, const MorphParams& params);

MorphResult morph(const NormalizedPair& pair, Method method, const MorphParams& params);

/// Morph of a and b + t: computed on (a, b) and shifted by alpha t.
MorphResult morph_translated(const Shape& a, const Shape& b, Vector t, Method method, const MorphParams& params);

/// Evaluates morphs of one pair at many parameters, building both partitions
/// once and memoizing S and T per alpha. Not thread-safe.
class PairMorpher {
public:
    PairMorpher(NormalizedPair pair, int disk_segments = kDefaultDiskSegments,
                double arc_tolerance = kDefaultArcTolerance);

    const NormalizedPair& pair() const { return pair_; }

    const Shape& dilation(double alpha);
    const Shape& voronoi(double alpha);
    Shape mixed(double alpha, double phi);
    Shape evaluate(Method method, double alpha, double phi);

    const Partition& forward();   ///< a cut by b's features
    const Partition& backward();  ///< b cut by a's features

private:
    void check_alpha(double alpha) const;

    NormalizedPair pair_;
    int segments_;
    double arc_tolerance_;
    std::optional<Partition> forward_, backward_;
    std::map<double, Shape> dilation_cache_, voronoi_cache_;
};

}  // namespace hausmorph
