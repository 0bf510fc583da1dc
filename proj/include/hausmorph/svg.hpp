#pragma once

// SVG frames for morph sequences.

#include <optional>
#include <string>
#include <vector>

#include "hausmorph/morph.hpp"

namespace hausmorph {

struct RenderOptions {
    double width = 400.0;
    double height = 400.0;
    double margin = 0.05;  ///< fraction of the larger extent added on every side
    std::string dilation_fill = "#4c72b0";
    std::string voronoi_fill = "#dd8452";
    std::string mixed_fill = "#55a868";
    std::vector<double> frames{0.0, 0.25, 0.5, 0.75, 1.0};

    const std::string& fill(Method m) const;
};

/// Throws GeometryError for a non-positive canvas, a negative margin or a
/// frame list that is not strictly increasing inside [0, 1].
void check(const RenderOptions& options);

/// Bounding box of all non-empty shapes, grown by the margin. Falls back to
/// the unit square when every shape is empty.
Box shared_view(const std::vector<const Shape*>& shapes, double margin);

/// One standalone SVG document. Each polygon becomes a path element whose
/// subpaths are its rings, filled with the even-odd rule. The y axis points
/// up.
std::string render_svg(const Shape& shape, const Box& view, const RenderOptions& options, const std::string& fill);

}  // namespace hausmorph
