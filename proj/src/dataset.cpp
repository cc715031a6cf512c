#include "dcshap/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dcshap/error.hpp"
#include "dcshap/rng.hpp"

namespace dcshap {

void PartitionSpec::validate(Index feature_count) const {
    if (party_count < 1) throw ConfigError("party_count must be at least 1");
    if (mode == PartitionMode::kHorizontal) {
        if (!feature_split.empty()) {
            throw ConfigError("feature_split is only valid in vertical mode");
        }
        if (bias) {
            if (*bias < 0.0 || *bias > 1.0) throw ConfigError("bias must lie in [0, 1]");
            if (party_count != 2) throw ConfigError("biased splits are defined for two parties");
        }
        return;
    }
    if (bias) throw ConfigError("bias is only valid in horizontal mode");
    if (static_cast<int>(feature_split.size()) != party_count) {
        throw ConfigError("vertical mode needs one feature range per party");
    }
    std::vector<bool> covered(static_cast<std::size_t>(feature_count), false);
    for (const auto& [first, last] : feature_split) {
        if (first < 0 || last >= feature_count || first > last) {
            throw ConfigError("feature range [" + std::to_string(first) + ", " +
                              std::to_string(last) + "] out of bounds");
        }
        for (int j = first; j <= last; ++j) {
            if (covered[static_cast<std::size_t>(j)]) {
                throw ConfigError("feature ranges overlap at index " + std::to_string(j));
            }
            covered[static_cast<std::size_t>(j)] = true;
        }
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
        throw ConfigError("feature ranges do not cover all features");
    }
}

LabeledDataset preprocess_adult(const LabeledDataset& ds) {
    const std::vector<std::string> drop = {"fnlwgt", "education"};
    std::vector<Index> keep;
    std::vector<bool> found(drop.size(), false);
    for (Index j = 0; j < ds.features.cols(); ++j) {
        const std::string& name = ds.features.feature_names[static_cast<std::size_t>(j)];
        const auto it = std::find(drop.begin(), drop.end(), name);
        if (it == drop.end()) {
            keep.push_back(j);
        } else {
            found[static_cast<std::size_t>(it - drop.begin())] = true;
        }
    }
    for (std::size_t d = 0; d < drop.size(); ++d) {
        if (!found[d]) throw DataError("column '" + drop[d] + "' not present");
    }

    LabeledDataset out;
    out.labels = ds.labels;
    out.features.values.resize(ds.features.rows(), static_cast<Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        out.features.values.col(static_cast<Index>(k)) = ds.features.values.col(keep[k]);
        out.features.feature_names.push_back(
            ds.features.feature_names[static_cast<std::size_t>(keep[k])]);
    }
    return out;
}

LabeledDataset take_rows(const LabeledDataset& ds, const std::vector<std::size_t>& rows) {
    LabeledDataset out;
    out.features.feature_names = ds.features.feature_names;
    out.features.values.resize(static_cast<Index>(rows.size()), ds.features.cols());
    if (ds.has_labels()) out.labels.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.features.values.row(static_cast<Index>(i)) =
            ds.features.values.row(static_cast<Index>(rows[i]));
        if (ds.has_labels()) out.labels[i] = ds.labels[rows[i]];
    }
    return out;
}

std::pair<LabeledDataset, LabeledDataset> split_train_test(const LabeledDataset& ds,
                                                           double test_fraction,
                                                           std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw ConfigError("test_fraction must lie strictly between 0 and 1");
    }
    const std::size_t rows = static_cast<std::size_t>(ds.rows());
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    const std::size_t test_rows =
        static_cast<std::size_t>(std::ceil(static_cast<double>(rows) * test_fraction));
    const std::vector<std::size_t> test_idx(order.begin(), order.begin() + test_rows);
    const std::vector<std::size_t> train_idx(order.begin() + test_rows, order.end());
    return {take_rows(ds, train_idx), take_rows(ds, test_idx)};
}

namespace {

std::vector<LabeledDataset> partition_horizontal(const LabeledDataset& ds,
                                                 const PartitionSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<std::size_t>> assignment(static_cast<std::size_t>(spec.party_count));

    if (spec.bias) {
        // Party 1 takes fraction b of the positives and enough negatives that
        // b of its own rows are positive; everything else goes to party 2.
        std::vector<std::size_t> positives;
        std::vector<std::size_t> negatives;
        for (std::size_t i = 0; i < ds.labels.size(); ++i) {
            (ds.labels[i] == 1 ? positives : negatives).push_back(i);
        }
        rng.shuffle(positives);
        rng.shuffle(negatives);
        const double b = *spec.bias;
        const std::size_t pos_to_party1 =
            static_cast<std::size_t>(std::llround(b * static_cast<double>(positives.size())));
        std::size_t party1_total = positives.size();
        if (b > 0.0) {
            party1_total = static_cast<std::size_t>(
                std::llround(static_cast<double>(pos_to_party1) / b));
        }
        const std::size_t neg_to_party1 =
            std::min(party1_total - pos_to_party1, negatives.size());

        auto& party1 = assignment[0];
        auto& party2 = assignment[1];
        party1.insert(party1.end(), positives.begin(), positives.begin() + pos_to_party1);
        party1.insert(party1.end(), negatives.begin(), negatives.begin() + neg_to_party1);
        party2.insert(party2.end(), positives.begin() + pos_to_party1, positives.end());
        party2.insert(party2.end(), negatives.begin() + neg_to_party1, negatives.end());
    } else {
        // Stratified deal: within each class, shuffled rows go round-robin.
        const int classes = ds.num_classes();
        for (int c = 0; c < classes; ++c) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < ds.labels.size(); ++i) {
                if (ds.labels[i] == c) members.push_back(i);
            }
            rng.shuffle(members);
            for (std::size_t i = 0; i < members.size(); ++i) {
                assignment[i % static_cast<std::size_t>(spec.party_count)].push_back(members[i]);
            }
        }
    }

    std::vector<LabeledDataset> parts;
    parts.reserve(assignment.size());
    for (auto& rows : assignment) {
        std::sort(rows.begin(), rows.end());
        parts.push_back(take_rows(ds, rows));
    }
    return parts;
}

std::vector<LabeledDataset> partition_vertical(const LabeledDataset& ds,
                                               const PartitionSpec& spec) {
    std::vector<LabeledDataset> parts;
    parts.reserve(spec.feature_split.size());
    for (std::size_t p = 0; p < spec.feature_split.size(); ++p) {
        const auto& [first, last] = spec.feature_split[p];
        const Index width = last - first + 1;
        LabeledDataset part;
        part.features.values = ds.features.values.middleCols(first, width);
        part.features.feature_names.assign(
            ds.features.feature_names.begin() + first,
            ds.features.feature_names.begin() + last + 1);
        if (p == 0) part.labels = ds.labels;  // party 1 is the label holder
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace

std::vector<LabeledDataset> partition(const LabeledDataset& ds, const PartitionSpec& spec,
                                      std::uint64_t seed) {
    spec.validate(ds.features.cols());
    if (spec.mode == PartitionMode::kHorizontal) return partition_horizontal(ds, spec, seed);
    return partition_vertical(ds, spec);
}

}  // namespace dcshap
