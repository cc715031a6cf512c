#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcshap/anchor.hpp"
#include "dcshap/knn.hpp"
#include "dcshap/matrix.hpp"
#include "dcshap/messages.hpp"
#include "dcshap/transform.hpp"

namespace dcshap {

/// Dimensions and predictor settings for a collaboration.
struct DcConfig {
    Index local_dim = -1;    ///< per-party reduced width; -1 picks ceil(3n/4)
    Index unified_dim = -1;  ///< shared space width; -1 picks the smallest local width
    int k = 7;
    int positive_class = 1;
    bool standardize = true;
};

/// What one collaborator keeps after training: its private shard, its
/// private dimensionality reduction, and, for row-partitioned data, the map
/// into the shared space.
struct PartyState {
    int party_id = 0;
    LabeledDataset data;  ///< labels empty for parties that do not hold them
    LocalTransform transform;
    std::optional<IntegrationMap> integration;
};

/// Rows of `raw` pushed through one party's reduction and integration map.
Matrix to_unified(const PartyState& party, const Matrix& raw);

/// Row-partitioned collaboration: every party holds all features for its own
/// samples. Parties exchange feature ranges (to build shared anchor data) and
/// anchor/training representations; the server aligns the representations on
/// the anchors and fits the shared predictor.
struct HorizontalCollab {
    std::vector<PartyState> parties;
    CollaborationModel model;
    AnchorSet anchor;
    double alignment_residual = 0.0;  ///< worst-case anchor row misalignment
};

HorizontalCollab train_collab_horizontal(const std::vector<LabeledDataset>& shards,
                                         const AnchorSet& anchor, const DcConfig& config,
                                         MessageLog* log = nullptr);

/// Column-partitioned collaboration: every party holds a block of features
/// for all samples; exactly one partner supplies labels. Local
/// representations are concatenated, so the shared space is the direct sum
/// of the per-party spaces.
struct VerticalCollab {
    std::vector<PartyState> parties;
    std::vector<Index> raw_offsets;  ///< raw block i = cols [raw_offsets[i], raw_offsets[i+1])
    std::vector<Index> rep_offsets;  ///< same layout in the shared space
    std::vector<std::string> feature_names;  ///< raw names, block order
    CollaborationModel model;

    Index parties_count() const { return static_cast<Index>(parties.size()); }
    Index raw_width() const { return raw_offsets.back(); }

    /// Which party owns a raw feature column.
    Index owner_of(Index raw_col) const;

    /// Splits raw rows into blocks, applies each party's reduction, and
    /// concatenates: the step the serving party runs on assembled inputs.
    Matrix transform_blocks(const Matrix& raw) const;
};

VerticalCollab train_collab_vertical(const std::vector<DataMatrix>& blocks,
                                     const std::vector<int>& labels, Index label_party,
                                     const DcConfig& config, MessageLog* log = nullptr);

}  // namespace dcshap
