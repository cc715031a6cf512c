#pragma once

#include <vector>

#include "dcshap/matrix.hpp"

namespace dcshap {

/// A party's private dimensionality reduction: per-column standardization
/// followed by projection onto the top right singular vectors of the
/// standardized training data. `scaling` is all ones when standardization is
/// disabled. Projection columns are orthonormal, with the sign of each fixed
/// so its largest-magnitude entry is positive.
struct LocalTransform {
    Matrix projection;  // input_dim x output_dim
    Vector centering;   // input_dim
    Vector scaling;     // input_dim, strictly positive

    Index input_dim() const { return projection.rows(); }
    Index output_dim() const { return projection.cols(); }
};

LocalTransform fit_local_transform(const DataMatrix& data, Index target_dim,
                                   bool standardize = true);

Matrix apply_transform(const LocalTransform& transform, const Matrix& values);
DataMatrix apply_transform(const LocalTransform& transform, const DataMatrix& data);
Vector apply_transform(const LocalTransform& transform, const Vector& point);

/// Per-party linear map from its intermediate representation into the shared
/// collaboration space. `residual` is the largest row-wise distance between
/// the mapped anchor representation and the common target, kept as a
/// diagnostic of the least-squares fit.
struct IntegrationMap {
    Matrix matrix;  // rep_dim x collab_dim
    double residual = 0.0;
};

struct IntegrationFit {
    std::vector<IntegrationMap> maps;
    Matrix target;  // anchor_count x collab_dim, shared across parties
};

/// Builds the common target from the top singular-vector coordinates of the
/// column-concatenated anchor representations, then solves one least-squares
/// problem per party for its integration map.
IntegrationFit fit_integration(const std::vector<Matrix>& anchor_reps, Index target_dim);

}  // namespace dcshap
