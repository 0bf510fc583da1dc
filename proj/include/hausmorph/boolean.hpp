#pragma once

// Regularized boolean operations and disk morphology (dilation, erosion,
// closing) on shapes.

#include <span>
#include <vector>

#include "hausmorph/shape.hpp"

namespace hausmorph {

// Boolean operations are exact on an integer grid. The pitch is a power of
// two chosen so the largest coordinate magnitude of the operands stays below
// 2^29 grid units (about 2e-9 for shapes of unit size); results are rounded
// to that grid.

inline constexpr int kDefaultDiskSegments = 64;

/// Regular `segments`-gon inscribed in the circle of `radius` about the
/// origin, with one vertex on the positive x-axis.
struct DiskApprox {
    double radius = 0.0;
    int segments = kDefaultDiskSegments;

    /// Largest gap between the polygon and the true circle: r (1 - cos(pi/k)).
    double error_bound() const;
    std::vector<Point> vertices() const;
};

/// Throws GeometryError unless radius >= 0 and segments is even and >= 8.
void check(const DiskApprox& disk);

double error_bound(double radius, int segments);

Shape intersect(const Shape& a, const Shape& b);
Shape unite(const Shape& a, const Shape& b);
Shape difference(const Shape& a, const Shape& b);

/// Union of many shapes in a single pass over one shared grid.
Shape unite_all(std::vector<Shape> parts);

/// Area of the symmetric difference.
double symmetric_difference_area(const Shape& a, const Shape& b);

/// Minkowski sum with the disk polygon.
Shape dilate(const Shape& shape, const DiskApprox& disk);

/// Complement of the dilated complement, taken inside the bounding box of the
/// shape grown by twice the radius.
Shape erode(const Shape& shape, const DiskApprox& disk);

/// erode(dilate(shape)).
Shape closing(const Shape& shape, const DiskApprox& disk);

}  // namespace hausmorph
