#pragma once

#include "terra/grid.hpp"

namespace terra {

enum class ResampleMethod {
    Bilinear, // continuous layers only
    Nearest,  // required for masks
};

/// Resize to new dimensions. Coordinates follow the pixel-center convention
/// (align-corners = false); bilinear sampling is edge-clamped so the output
/// range is contained in the input range. Masks must use Nearest.
Grid resample(const Grid& grid, int new_width, int new_height, ResampleMethod method);

/// Rotate by `alpha` radians (positive = counter-clockwise on a y-down
/// display) about the image center, expanding the canvas to hold the rotated
/// extent. Destination pixels whose source point falls outside the image get
/// `fill`; inside points never blend with the fill. Masks use Nearest.
Grid rotate_expand(const Grid& grid, double alpha, ResampleMethod method, double fill);

} // namespace terra
