#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dcshap/matrix.hpp"

namespace dcshap {

enum class PartitionMode { kHorizontal, kVertical };

/// How to distribute a dataset across collaborating parties.
///
/// Horizontal mode splits samples. Without `bias` the split is stratified by
/// label into equal shares. With `bias` = b (two parties only), party 1
/// receives fraction b of the positive-label samples plus enough negatives
/// that b of party 1's own samples are positive; party 2 gets the rest.
///
/// Vertical mode assigns each party the inclusive feature-index ranges in
/// `feature_split`; all parties keep every row in identical order and only
/// party 1 keeps the labels.
struct PartitionSpec {
    PartitionMode mode = PartitionMode::kHorizontal;
    int party_count = 2;
    std::optional<double> bias;
    std::vector<std::pair<int, int>> feature_split;

    void validate(Index feature_count) const;
};

/// Drops the fnlwgt and education columns. Errors if either is absent.
LabeledDataset preprocess_adult(const LabeledDataset& ds);

/// Seeded shuffle followed by a split; the first ceil(rows * test_fraction)
/// shuffled rows form the test set. Returns (train, test).
std::pair<LabeledDataset, LabeledDataset> split_train_test(const LabeledDataset& ds,
                                                           double test_fraction,
                                                           std::uint64_t seed);

/// Selects rows by index, preserving order.
LabeledDataset take_rows(const LabeledDataset& ds, const std::vector<std::size_t>& rows);

std::vector<LabeledDataset> partition(const LabeledDataset& ds, const PartitionSpec& spec,
                                      std::uint64_t seed);

}  // namespace dcshap
