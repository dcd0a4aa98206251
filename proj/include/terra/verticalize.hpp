#pragma once

#include "terra/geo.hpp"

namespace terra {

struct TrimConfig {
    double tau_first = 1.0;  // first sweep: only fully black lines go
    double tau_second = 0.1; // after rotation: lines at least 10% black go
    int black_threshold = 0; // pixel is black iff value <= threshold

    void validate() const;
};

/// Outcome of the rotation estimate. alpha is the signed rotation that
/// apply_verticalization undoes (it rotates every layer by -alpha, positive
/// alpha meaning counter-clockwise on a y-down display). mirrored follows
/// the y_left < H/2 rule and is applied before the rotation.
struct VerticalizeResult {
    double alpha = 0.0; // radians, in (-pi/2, pi/2)
    bool mirrored = false;
    int y_left = 0;   // row of first non-black pixel in the leftmost column
    int x_bottom = 0; // column of first non-black pixel in the bottom row
};

/// Iteratively drop outermost rows/columns whose black-pixel ratio on the
/// ortho reaches tau. DEM-resolution layers are cut at proportionally scaled
/// line indices. Throws DegenerateSampleError when nothing remains.
RasterSample trim_black_border(const RasterSample& sample, double tau, int black_threshold = 0);

/// Scan triangle estimate: y_left down the leftmost column, x_bottom along
/// the bottom row, theta = arctan((H - y_left) / x_bottom), |alpha| = pi/2 -
/// theta. x_bottom == 0 or y_left == 0 means the frame is already vertical.
/// Throws ValidationError when the leftmost column or bottom row is entirely
/// black.
VerticalizeResult estimate_rotation(const Grid& ortho, int black_threshold = 0);

/// Mirror (when flagged), rotate all four layers by -alpha with canvas
/// expansion (ortho fills black, DEM fills the nodata sentinel, masks fill
/// 1), then trim again with tau_second.
RasterSample apply_verticalization(const RasterSample& sample, const VerticalizeResult& res,
                                   const TrimConfig& trim, float sentinel = kNodataSentinel);

} // namespace terra
