#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terra/patching.hpp"

namespace terra {

struct StatsConfig {
    int pixels_per_patch = 10000; // sampled per patch, without replacement
    int histogram_bins = 256;
    double clip_min = -5000.0; // metric histogram range, meters
    double clip_max = 5000.0;
    double std_clip = 5.0; // standardized histogram covers [-std_clip, std_clip]
    double pixel_spacing = 6.0; // meters per pixel for slopes
    std::uint64_t rng_seed = 0;

    void validate() const;
};

struct PatchStats {
    double mean = 0.0;   // meters
    double stddev = 0.0; // population
    double masked_fraction = 0.0;
    double mean_slope = 0.0; // degrees
    double lat = 0.0;
    double lon = 0.0;
    bool has_location = false;
};

/// Mean/stddev over all DEM pixels, masked fraction over the union mask,
/// mean central-difference slope over interior pixels.
PatchStats patch_stats(const Patch& patch, const StatsConfig& cfg);

/// Fixed-width histogram; out-of-range values land in the edge bins so the
/// total mass always equals the number of added values.
struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::int64_t> counts;

    Histogram() = default;
    Histogram(double lo_, double hi_, int bins) : lo(lo_), hi(hi_), counts(bins, 0) {}

    void add(double value);
    void merge(const Histogram& other);
    std::int64_t total() const;
    double bin_left(int i) const;
    double bin_right(int i) const;
};

/// Per-split accumulator for the elevation value distributions in metric and
/// per-patch standardized space. Sampling is seeded per patch from
/// (rng_seed, patch identity), so results are independent of the order in
/// which patches are added.
struct ElevationHistograms {
    Histogram metric;
    Histogram standardized;
    std::int64_t patches = 0;
    std::int64_t skipped_flat = 0; // sigma = 0 patches skipped in standardized space

    explicit ElevationHistograms(const StatsConfig& cfg)
        : metric(cfg.clip_min, cfg.clip_max, cfg.histogram_bins),
          standardized(-cfg.std_clip, cfg.std_clip, cfg.histogram_bins) {}

    void add_patch(const Patch& patch, const StatsConfig& cfg);
};

} // namespace terra
