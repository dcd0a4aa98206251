#pragma once

#include <string>

#include "terra/grid.hpp"

namespace terra {

/// Plain lon/lat rectangle. Antimeridian-crossing footprints are not
/// supported; lon_min <= lon_max and lat_min <= lat_max always hold.
struct GeoFootprint {
    double lon_min = 0.0;
    double lon_max = 0.0;
    double lat_min = 0.0;
    double lat_max = 0.0;

    void validate() const;

    /// Closed-interval intersection test; shared edges count as overlap.
    bool intersects(const GeoFootprint& other) const {
        return lon_min <= other.lon_max && other.lon_min <= lon_max &&
               lat_min <= other.lat_max && other.lat_min <= lat_max;
    }

    double center_lon() const { return 0.5 * (lon_min + lon_max); }
    double center_lat() const { return 0.5 * (lat_min + lat_max); }

    bool operator==(const GeoFootprint&) const = default;
};

/// Componentwise min/max envelope of two footprints.
GeoFootprint bbox_union(const GeoFootprint& a, const GeoFootprint& b);

/// One source sample: orthoimage, DEM and the two masks plus the left/right
/// swath footprints. Masks always share the DEM's dimensions.
struct RasterSample {
    std::string id;
    Grid ortho;        // intensity
    Grid dem;          // elevation
    Grid nodata_mask;  // originally-missing pixels
    Grid outlier_mask; // artefact pixels flagged during repair
    GeoFootprint left_footprint;
    GeoFootprint right_footprint;
};

} // namespace terra
