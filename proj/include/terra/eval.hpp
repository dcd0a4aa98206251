#pragma once

#include <cstdint>
#include <vector>

#include "terra/grid.hpp"

namespace terra {

struct Standardization {
    double mu = 0.0;    // meters
    double sigma = 0.0; // meters, > 0
};

struct MetricRecord {
    double rmse = 0.0;
    double mae = 0.0;
    double rel_err = 0.0;
    double rel_abs_err = 0.0;
};

/// (grid - mu) / sigma with mu/sigma over non-excluded pixels (population
/// sigma); excluded pixels are transformed by the same statistics. exclude
/// may be null. Throws DegenerateInputError when sigma is zero or fewer than
/// two pixels survive.
std::pair<Grid, Standardization> standardize(const Grid& grid, const Grid* exclude);

/// h = sigma_gt * h_rel + mu_gt.
Grid rescale_to_metric(const Grid& relative, const Standardization& gt_stats);

/// RMSE, MAE and the range-relative errors over non-excluded pixels; the
/// ground-truth range is computed on the same pixel set. Throws
/// DegenerateInputError when the range is zero.
MetricRecord metrics(const Grid& gt, const Grid& pred, const Grid* exclude);

/// One sampled pixel of the error exports: errors relative to the patch
/// range, keyed by the pixel's standardized ground-truth elevation.
struct SampledError {
    double std_gt = 0.0;
    double rel_err = 0.0;
    double rel_abs_err = 0.0;
};

/// Seeded sample of pixel positions (without replacement, non-excluded
/// only); per-pixel relative errors plus the standardized gt value.
std::vector<SampledError> sample_errors(const Grid& gt, const Grid& pred, const Grid* exclude,
                                        int samples_per_patch, std::uint64_t seed);

/// Per-elevation-bin RelErr distribution summary (violin export): bins over
/// standardized ground-truth elevation, quantiles of the relative error.
struct ErrorBin {
    double bin_left = 0.0;
    double bin_right = 0.0;
    std::int64_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double p05 = 0.0, p25 = 0.0, p50 = 0.0, p75 = 0.0, p95 = 0.0;
};

/// Bucket sampled errors by standardized gt elevation into `bins` uniform
/// bins over [lo, hi]; values outside the range are clamped into the edge
/// bins. Quantiles are linear-interpolated order statistics.
std::vector<ErrorBin> bin_errors(const std::vector<SampledError>& samples, int bins = 13,
                                 double lo = -3.0, double hi = 3.0);

} // namespace terra
