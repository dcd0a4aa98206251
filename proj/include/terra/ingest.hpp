#pragma once

#include <filesystem>
#include <string>

#include "terra/geo.hpp"

namespace terra {

struct SampleSelectionConfig {
    double max_aspect_ratio = 1.0; // reject when ortho W/H strictly exceeds this
    float nodata_sentinel = kNodataSentinel;
    double max_abs_elevation = 10000.0; // meters
    double min_elevation = -5000.0;     // meters

    void validate() const;
};

enum class RejectReason {
    None,
    Aspect,
    ElevationRange,
};

struct SelectionResult {
    bool accepted = true;
    RejectReason reason = RejectReason::None;
};

const char* to_string(RejectReason reason);

/// Load a sample directory: ortho.mgrd, dem.mgrd, meta.json. Masks start
/// all-zero; the DEM keeps its native resolution.
RasterSample load_sample(const std::filesystem::path& dir);

/// Step-1 selection: aspect ratio and elevation range. Rejection is a value,
/// not an error; W/H exactly equal to the threshold is accepted.
SelectionResult select_sample(const RasterSample& sample, const SampleSelectionConfig& cfg);

/// mask[p] = 1 iff dem[p] == sentinel (exact float equality).
Grid extract_nodata_mask(const Grid& dem, float sentinel);

} // namespace terra
