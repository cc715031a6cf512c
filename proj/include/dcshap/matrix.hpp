#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace dcshap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense numeric table with named columns. Rows are samples; this is the
/// carrier for raw data, anchor data, and intermediate representations.
struct DataMatrix {
    Matrix values;
    std::vector<std::string> feature_names;

    Index rows() const { return values.rows(); }
    Index cols() const { return values.cols(); }

    /// Throws DataError if any entry is non-finite or the name list does
    /// not match the column count.
    void validate() const;
};

/// Feature table plus integer class labels in {0, ..., C-1}. The label
/// vector may be empty for parties that hold features only.
struct LabeledDataset {
    DataMatrix features;
    std::vector<int> labels;

    Index rows() const { return features.rows(); }
    bool has_labels() const { return !labels.empty(); }
    int num_classes() const;

    void validate() const;
};

/// Column-wise median; even row counts take the mean of the two middle values.
Vector column_medians(const Matrix& values);

Vector column_means(const Matrix& values);

/// Row-concatenation; all blocks must share the column count.
Matrix vstack(const std::vector<Matrix>& blocks);

/// Column-concatenation; all blocks must share the row count.
Matrix hstack(const std::vector<Matrix>& blocks);

}  // namespace dcshap
