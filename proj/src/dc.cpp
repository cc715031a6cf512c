#include "dcshap/dc.hpp"

#include <set>
#include <string>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

Index default_local_dim(Index feature_count) {
    return (3 * feature_count + 3) / 4;  // ceil(3n/4)
}

std::string party_name(int id) { return "party" + std::to_string(id); }

}  // namespace

Matrix to_unified(const PartyState& party, const Matrix& raw) {
    Matrix rep = apply_transform(party.transform, raw);
    if (party.integration) rep *= party.integration->matrix;
    return rep;
}

HorizontalCollab train_collab_horizontal(const std::vector<LabeledDataset>& shards,
                                         const AnchorSet& anchor, const DcConfig& config,
                                         MessageLog* log) {
    if (shards.empty()) throw DataError("no collaborators");
    const Index width = shards.front().features.cols();
    for (const auto& shard : shards) {
        shard.validate();
        if (!shard.has_labels())
            throw DataError("every row-partition collaborator must hold labels");
        if (shard.features.cols() != width ||
            shard.features.feature_names != shards.front().features.feature_names)
            throw DataError("collaborators disagree on the feature schema");
    }
    if (anchor.data.cols() != width)
        throw DataError("anchor data does not match the feature schema");

    HorizontalCollab collab;
    collab.anchor = anchor;

    std::vector<Matrix> anchor_reps;
    anchor_reps.reserve(shards.size());
    for (size_t i = 0; i < shards.size(); ++i) {
        const Index local_dim = config.local_dim > 0
                                    ? config.local_dim
                                    : default_local_dim(width);
        PartyState party;
        party.party_id = static_cast<int>(i);
        party.data = shards[i];
        party.transform =
            fit_local_transform(shards[i].features, local_dim, config.standardize);
        anchor_reps.push_back(apply_transform(party.transform, anchor.data.values));
        if (log) {
            log->record(party_name(party.party_id), "server", "anchor_representation",
                        anchor_reps.back().rows(), anchor_reps.back().cols());
        }
        collab.parties.push_back(std::move(party));
    }

    Index unified_dim = config.unified_dim;
    if (unified_dim <= 0) {
        unified_dim = anchor_reps.front().cols();
        for (const auto& rep : anchor_reps)
            unified_dim = std::min(unified_dim, rep.cols());
    }

    IntegrationFit fit = fit_integration(anchor_reps, unified_dim);
    collab.alignment_residual = 0.0;
    for (size_t i = 0; i < shards.size(); ++i) {
        collab.alignment_residual = std::max(collab.alignment_residual, fit.maps[i].residual);
        collab.parties[i].integration = std::move(fit.maps[i]);
        if (log)
            log->record("server", party_name(static_cast<int>(i)), "integration_map",
                        anchor_reps[i].cols(), unified_dim);
    }

    Index total_rows = 0;
    for (const auto& shard : shards) total_rows += shard.rows();
    Matrix unified(total_rows, unified_dim);
    std::vector<int> labels;
    labels.reserve(static_cast<size_t>(total_rows));
    Index at = 0;
    for (size_t i = 0; i < shards.size(); ++i) {
        const Matrix rows = to_unified(collab.parties[i], shards[i].features.values);
        unified.middleRows(at, rows.rows()) = rows;
        at += rows.rows();
        labels.insert(labels.end(), shards[i].labels.begin(), shards[i].labels.end());
        if (log) {
            log->record(party_name(static_cast<int>(i)), "server",
                        "training_representation", rows.rows(), rows.cols());
            log->record(party_name(static_cast<int>(i)), "server", "training_labels",
                        shards[i].rows(), 1);
        }
    }

    collab.model.k = config.k;
    collab.model.positive_class = config.positive_class;
    collab.model.training_points = std::move(unified);
    collab.model.training_labels = std::move(labels);
    collab.model.finalize();
    return collab;
}

Index VerticalCollab::owner_of(Index raw_col) const {
    if (raw_col < 0 || raw_col >= raw_width())
        throw DataError("feature column outside the collaboration");
    for (Index i = 0; i + 1 < static_cast<Index>(raw_offsets.size()); ++i)
        if (raw_col < raw_offsets[static_cast<size_t>(i) + 1]) return i;
    return parties_count() - 1;
}

Matrix VerticalCollab::transform_blocks(const Matrix& raw) const {
    if (raw.cols() != raw_width())
        throw DataError("row width does not match the collaboration");
    Matrix out(raw.rows(), rep_offsets.back());
    for (size_t i = 0; i < parties.size(); ++i) {
        const Index begin = raw_offsets[i];
        const Index width = raw_offsets[i + 1] - begin;
        out.middleCols(rep_offsets[i], rep_offsets[i + 1] - rep_offsets[i]) =
            apply_transform(parties[i].transform, Matrix(raw.middleCols(begin, width)));
    }
    return out;
}

VerticalCollab train_collab_vertical(const std::vector<DataMatrix>& blocks,
                                     const std::vector<int>& labels, Index label_party,
                                     const DcConfig& config, MessageLog* log) {
    if (blocks.empty()) throw DataError("no collaborators");
    const Index rows = blocks.front().rows();
    std::set<std::string> seen;
    for (const auto& block : blocks) {
        block.validate();
        if (block.rows() != rows)
            throw DataError("column-partition blocks disagree on the sample count");
        for (const auto& name : block.feature_names)
            if (!seen.insert(name).second)
                throw DataError("duplicate feature name across blocks: " + name);
    }
    if (static_cast<Index>(labels.size()) != rows)
        throw DataError("label count does not match the sample count");
    if (label_party < 0 || label_party >= static_cast<Index>(blocks.size()))
        throw ConfigError("label holder is not one of the collaborators");

    VerticalCollab collab;
    collab.raw_offsets.assign(1, 0);
    collab.rep_offsets.assign(1, 0);

    for (size_t i = 0; i < blocks.size(); ++i) {
        const Index local_dim = config.local_dim > 0
                                    ? config.local_dim
                                    : default_local_dim(blocks[i].cols());
        PartyState party;
        party.party_id = static_cast<int>(i);
        party.data.features = blocks[i];
        if (static_cast<Index>(i) == label_party) party.data.labels = labels;
        party.transform =
            fit_local_transform(blocks[i], local_dim, config.standardize);
        collab.parties.push_back(std::move(party));
        collab.raw_offsets.push_back(collab.raw_offsets.back() + blocks[i].cols());
        collab.rep_offsets.push_back(collab.rep_offsets.back() +
                                     collab.parties.back().transform.projection.cols());
        collab.feature_names.insert(collab.feature_names.end(),
                                    blocks[i].feature_names.begin(),
                                    blocks[i].feature_names.end());
    }

    Matrix unified(rows, collab.rep_offsets.back());
    for (size_t i = 0; i < blocks.size(); ++i) {
        const Matrix rep = apply_transform(collab.parties[i].transform, blocks[i].values);
        unified.middleCols(collab.rep_offsets[i], rep.cols()) = rep;
        if (log)
            log->record(party_name(static_cast<int>(i)), "server",
                        "training_representation", rep.rows(), rep.cols());
    }
    if (log)
        log->record(party_name(static_cast<int>(label_party)), "server", "training_labels",
                    rows, 1);

    collab.model.k = config.k;
    collab.model.positive_class = config.positive_class;
    collab.model.training_points = std::move(unified);
    collab.model.training_labels = labels;
    collab.model.finalize();
    return collab;
}

}  // namespace dcshap
