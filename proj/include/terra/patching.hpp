#pragma once

#include <string>
#include <vector>

#include "terra/geo.hpp"

namespace terra {

struct PatchConfig {
    int patch_size = 518;
    double max_black_fraction = 0.10;   // reject when strictly above
    double max_imputed_fraction = 0.15; // reject when strictly above
    double min_elev_std = 10.0;         // meters; reject when strictly below

    void validate() const;
};

/// Aligned quadruple cut from one sample, with provenance.
struct Patch {
    std::string sample_id;
    int row0 = 0;
    int col0 = 0;
    Grid ortho;
    Grid dem;
    Grid invalid_mask;
    Grid outlier_mask;
};

enum PatchReject : unsigned {
    kRejectBlack = 1u << 0,
    kRejectImputed = 1u << 1,
    kRejectFlat = 1u << 2,
};

struct PatchDecision {
    unsigned reasons = 0; // PatchReject bits; empty means accepted
    double black_fraction = 0.0;
    double imputed_fraction = 0.0;
    double elev_std = 0.0; // population stddev, meters

    bool accepted() const { return reasons == 0; }
};

/// Bilinear-resample the DEM and nearest-resample the masks to the ortho
/// dimensions.
RasterSample match_resolution(const RasterSample& sample);

/// Non-overlapping patch grid anchored at (0,0); edge remainders are
/// dropped. Output ordered by (row0, col0).
std::vector<Patch> tile(const RasterSample& sample, const PatchConfig& cfg);

/// Three-way rejection: black ortho fraction > max_black_fraction, imputed
/// (invalid OR outlier) fraction > max_imputed_fraction, DEM stddev <
/// min_elev_std. All failed rules are recorded.
PatchDecision select_patch(const Patch& patch, const PatchConfig& cfg);

} // namespace terra
