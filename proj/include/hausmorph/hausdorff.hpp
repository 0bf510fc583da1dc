#pragma once

// Hausdorff distance between filled polygonal regions: points of one shape
// lying inside the other are at distance zero.

#include "hausmorph/shape.hpp"

namespace hausmorph {

struct HausdorffResult {
    double distance = 0.0;
    Point witness_source{};  ///< a point of the source realizing the distance
    Point witness_target{};  ///< its closest point on the target
};

/// sup over a in A of the distance from a to B. The supremum is attained at
/// a vertex of A, a Voronoi vertex of B's features inside A, or a crossing
/// of A's boundary with a Voronoi edge of B; all of these are evaluated
/// exactly. Ties prefer the lexicographically smallest witness.
/// Throws GeometryError if either shape is empty.
HausdorffResult directed_hausdorff(const Shape& a, const Shape& b);

/// The larger directed distance; ties report the a -> b direction.
HausdorffResult hausdorff(const Shape& a, const Shape& b);

/// Brute-force estimate for tests: samples A's boundary every `spacing` and
/// its interior on a grid of that pitch, and measures each sample's distance
/// to B. Never exceeds the true directed distance.
double directed_hausdorff_oracle(const Shape& a, const Shape& b, double spacing);

/// Maximum of both sampled directions.
double hausdorff_oracle(const Shape& a, const Shape& b, double spacing);

}  // namespace hausmorph
