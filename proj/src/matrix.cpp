#include "dcshap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dcshap/error.hpp"

namespace dcshap {

void DataMatrix::validate() const {
    if (static_cast<Index>(feature_names.size()) != values.cols()) {
        throw DataError("feature name count " + std::to_string(feature_names.size()) +
                        " does not match column count " + std::to_string(values.cols()));
    }
    if (!values.allFinite()) {
        throw DataError("data matrix contains non-finite values");
    }
}

int LabeledDataset::num_classes() const {
    int max_label = -1;
    for (int label : labels) max_label = std::max(max_label, label);
    return max_label + 1;
}

void LabeledDataset::validate() const {
    features.validate();
    if (labels.empty()) return;
    if (static_cast<Index>(labels.size()) != features.rows()) {
        throw DataError("label count " + std::to_string(labels.size()) +
                        " does not match row count " + std::to_string(features.rows()));
    }
    std::set<int> seen(labels.begin(), labels.end());
    if (*seen.begin() < 0) throw DataError("negative class label");
    const int classes = num_classes();
    if (classes < 2) throw DataError("need at least two classes, got " + std::to_string(classes));
}

Vector column_medians(const Matrix& values) {
    const Index rows = values.rows();
    const Index cols = values.cols();
    Vector medians(cols);
    std::vector<double> column(static_cast<std::size_t>(rows));
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) column[static_cast<std::size_t>(i)] = values(i, j);
        std::sort(column.begin(), column.end());
        const std::size_t mid = column.size() / 2;
        if (column.size() % 2 == 1) {
            medians(j) = column[mid];
        } else {
            medians(j) = 0.5 * (column[mid - 1] + column[mid]);
        }
    }
    return medians;
}

Vector column_means(const Matrix& values) {
    return values.colwise().mean().transpose();
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    Index total_rows = 0;
    for (const Matrix& block : blocks) total_rows += block.rows();
    if (blocks.empty()) return Matrix(0, 0);
    Matrix out(total_rows, blocks.front().cols());
    Index at = 0;
    for (const Matrix& block : blocks) {
        out.middleRows(at, block.rows()) = block;
        at += block.rows();
    }
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    Index total_cols = 0;
    for (const Matrix& block : blocks) total_cols += block.cols();
    if (blocks.empty()) return Matrix(0, 0);
    Matrix out(blocks.front().rows(), total_cols);
    Index at = 0;
    for (const Matrix& block : blocks) {
        out.middleCols(at, block.cols()) = block;
        at += block.cols();
    }
    return out;
}

}  // namespace dcshap
