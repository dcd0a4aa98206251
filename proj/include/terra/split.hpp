#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "terra/geo.hpp"

namespace terra {

enum class SplitLabel {
    Unassigned,
    Train,
    Val,
};

const char* to_string(SplitLabel label);
SplitLabel split_label_from_string(const std::string& text);

struct SampleFootprint {
    std::string sample_id;
    GeoFootprint union_bbox; // union of the left and right swath boxes
    std::int64_t patch_count = 0;
};

struct Cluster {
    std::string cluster_id; // lexicographically smallest member id
    std::vector<std::string> members;
    std::int64_t patch_count = 0;
    SplitLabel split = SplitLabel::Unassigned;
};

/// Clusters sorted by cluster_id; members sorted within each cluster.
using ClusterSet = std::vector<Cluster>;

/// Connected components of the footprint-intersection graph (closed
/// intervals, edge-touching counts).
ClusterSet cluster(const std::vector<SampleFootprint>& footprints);

/// Greedy cluster-wise assignment: clusters in descending patch_count (ties
/// by cluster_id, seed-shuffled among equal counts), each placed on the
/// split currently furthest below its target patch share.
void assign_splits(ClusterSet& clusters, double train_fraction, std::uint64_t seed);

struct LeakageReport {
    std::vector<std::pair<std::string, std::string>> violations;

    bool ok() const { return violations.empty(); }
};

/// Cross-split pairwise intersection check over the union bboxes.
LeakageReport verify_no_leakage(const ClusterSet& clusters,
                                const std::vector<SampleFootprint>& footprints);

void write_clusters_json(const ClusterSet& clusters, const std::filesystem::path& path);
ClusterSet read_clusters_json(const std::filesystem::path& path);

} // namespace terra
