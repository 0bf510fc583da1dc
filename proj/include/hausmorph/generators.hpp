#pragma once

// Synthetic shape pairs: interlocking combs, random star polygons and the
// two-squares fixture.

#include <cstdint>
#include <random>
#include <utility>

#include "hausmorph/shape.hpp"

namespace hausmorph {

using ShapePair = std::pair<Shape, Shape>;

/// A horizontal comb (vertical spine, prongs along +x) and its mirror image
/// in the diagonal, so every prong of one crosses every prong of the other.
/// Prong pitch 1, prong width 1/4. Throws GeometryError for prongs < 2.
ShapePair generate_comb_pair(int prongs);

/// Two star-shaped polygons about the origin drawn from one seeded stream.
/// Throws GeometryError for vertices < 3.
ShapePair generate_random_pair(std::uint64_t seed, int vertices);

/// [0,1]^2 and the unit square shifted right by 1 + gap.
/// Throws GeometryError for gap < 0.
ShapePair generate_squares_pair(double gap);

/// Star polygon: one vertex per angular stratum with jittered angle and a
/// radius in [0.5, 1]. Uses raw engine output so the result is identical on
/// every platform.
Ring random_star(std::mt19937_64& rng, int vertices, Point center = {});

}  // namespace hausmorph
