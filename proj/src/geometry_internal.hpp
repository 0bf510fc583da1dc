#pragma once

// Predicates shared by the source files. Not installed.

#include "hausmorph/shape.hpp"

namespace hausmorph::detail {

/// Sign of the turn a -> b -> c (positive for a left turn).
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// Closed-segment intersection test (touching counts).
bool segments_intersect(Point p0, Point p1, Point q0, Point q1);

/// Squared distance from p to the closed segment [a, b] and the parameter of
/// the nearest point.
double point_segment_distance2(Point p, Point a, Point b, double* t_out = nullptr);

}  // namespace hausmorph::detail
