#pragma once

#include <cstdint>
#include <vector>

#include "dcshap/matrix.hpp"

namespace dcshap {

struct FeatureRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Synthetic data shared verbatim by every party; values lie inside the
/// agreed per-feature ranges.
struct AnchorSet {
    DataMatrix data;
};

/// Per-column [min, max] of a data matrix.
std::vector<FeatureRange> feature_ranges(const Matrix& values);

/// Element-wise union of per-party ranges. This is the only statistic the
/// parties exchange to agree on anchor bounds (2n scalars).
std::vector<FeatureRange> pool_ranges(const std::vector<std::vector<FeatureRange>>& per_party);

/// Each cell is drawn uniformly from its feature's range, row by row.
/// Deterministic for a fixed seed.
AnchorSet generate_anchor(const std::vector<FeatureRange>& ranges, Index anchor_count,
                          std::uint64_t seed,
                          const std::vector<std::string>& feature_names = {});

}  // namespace dcshap
