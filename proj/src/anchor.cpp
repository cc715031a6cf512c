#include "dcshap/anchor.hpp"

#include <algorithm>
#include <string>

#include "dcshap/error.hpp"
#include "dcshap/rng.hpp"

namespace dcshap {

std::vector<FeatureRange> feature_ranges(const Matrix& values) {
    std::vector<FeatureRange> ranges(static_cast<std::size_t>(values.cols()));
    for (Index j = 0; j < values.cols(); ++j) {
        ranges[static_cast<std::size_t>(j)] = {values.col(j).minCoeff(), values.col(j).maxCoeff()};
    }
    return ranges;
}

std::vector<FeatureRange> pool_ranges(const std::vector<std::vector<FeatureRange>>& per_party) {
    if (per_party.empty()) return {};
    std::vector<FeatureRange> pooled = per_party.front();
    for (std::size_t p = 1; p < per_party.size(); ++p) {
        if (per_party[p].size() != pooled.size()) {
            throw DataError("parties disagree on feature count while pooling ranges");
        }
        for (std::size_t j = 0; j < pooled.size(); ++j) {
            pooled[j].lo = std::min(pooled[j].lo, per_party[p][j].lo);
            pooled[j].hi = std::max(pooled[j].hi, per_party[p][j].hi);
        }
    }
    return pooled;
}

AnchorSet generate_anchor(const std::vector<FeatureRange>& ranges, Index anchor_count,
                          std::uint64_t seed, const std::vector<std::string>& feature_names) {
    if (anchor_count < 1) throw ConfigError("anchor_count must be at least 1");
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        if (ranges[j].lo > ranges[j].hi) {
            throw ConfigError("inverted range for feature " + std::to_string(j));
        }
    }
    AnchorSet anchor;
    const Index cols = static_cast<Index>(ranges.size());
    anchor.data.values.resize(anchor_count, cols);
    Rng rng(seed);
    for (Index i = 0; i < anchor_count; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const FeatureRange& range = ranges[static_cast<std::size_t>(j)];
            anchor.data.values(i, j) = rng.uniform(range.lo, range.hi);
        }
    }
    if (!feature_names.empty()) {
        if (static_cast<Index>(feature_names.size()) != cols) {
            throw ConfigError("anchor feature name count does not match range count");
        }
        anchor.data.feature_names = feature_names;
    } else {
        anchor.data.feature_names.reserve(static_cast<std::size_t>(cols));
        for (Index j = 0; j < cols; ++j) {
            anchor.data.feature_names.push_back("f" + std::to_string(j));
        }
    }
    return anchor;
}

}  // namespace dcshap
