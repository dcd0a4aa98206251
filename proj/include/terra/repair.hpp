#pragma once

#include <utility>
#include <vector>

#include "terra/grid.hpp"

namespace terra {

struct FillConfig {
    int kernel = 31; // odd, >= 3

    void validate() const;
};

/// One sliding-window outlier pass: window size, step overlap, score
/// threshold and the Gaussian spread as a fraction of the window.
struct OutlierPass {
    double threshold = 1.0;
    int window = 10;
    int overlap = 5;
    double spread = 0.2;

    void validate() const;
};

struct OutlierConfig {
    std::vector<OutlierPass> passes = default_passes();
    bool two_sided = true; // flag |Z| > T; one-sided flags Z > T only

    static std::vector<OutlierPass> default_passes() {
        return {
            {1.2, 10, 5, 0.2},
            {1.1, 45, 20, 0.21},
            {0.9, 90, 30, 0.27},
        };
    }
};

/// Unnormalized 2-D Gaussian, peak 1 at the window center, center at
/// (window-1)/2 in both axes, standard deviation spread*window pixels.
struct GaussianKernel {
    int window = 0;
    std::vector<double> weights; // window x window, row-major

    double at(int x, int y) const { return weights[static_cast<std::size_t>(y) * window + x]; }
};

GaussianKernel gaussian_weights(int window, double spread);

/// Replace every pixel with missing=1 by the mean of valid pixels inside the
/// centered kernel window (clipped at edges). Pixels whose window holds no
/// valid pixel are picked up by later sweeps that may read earlier fills.
/// Valid pixels pass through bitwise unchanged. Throws
/// UnrecoverableSampleError when the grid has no valid pixel at all.
Grid fill_missing(const Grid& dem, const Grid& missing, const FillConfig& cfg);

/// Gaussian-weighted median standard score over overlapping windows:
/// windows of pass.window pixels stepped by window - overlap (last window
/// flush with the edge), per-window median and population stddev over
/// non-excluded pixels, Z = w_g * (h - median) / stddev, flagged when
/// Z > T (|Z| > T when two_sided). Flags OR across windows. Windows with
/// stddev < 1e-9 or fewer than 2 usable pixels flag nothing.
Grid detect_outliers(const Grid& dem, const Grid& excluded, const OutlierPass& pass,
                     bool two_sided = true);

/// Iterate the configured passes: detect against nodata plus everything
/// flagged so far, fold the new flags in, re-fill. Returns the refined DEM
/// and the accumulated outlier mask (always disjoint from nodata).
std::pair<Grid, Grid> refine_elevation(const Grid& dem, const Grid& nodata,
                                       const OutlierConfig& cfg, const FillConfig& fill);

} // namespace terra
