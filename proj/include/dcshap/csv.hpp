#pragma once

#include <string>

#include "dcshap/matrix.hpp"

namespace dcshap {

/// Loads a UTF-8, comma-delimited CSV with a header row.
///
/// Columns whose cells all parse as reals become numeric features; any other
/// column is treated as categorical and label-encoded in first-seen order
/// (missing-value markers such as "?" are just another category). The label
/// column is removed from the features and encoded to {0, ..., C-1}: numeric
/// labels map by ascending value, text labels by lexicographic order, so the
/// class ids do not depend on row order.
LabeledDataset load_csv(const std::string& path, const std::string& label_column);

}  // namespace dcshap
