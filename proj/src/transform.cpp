#include "dcshap/transform.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <string>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

// Flips each column so that its largest-magnitude entry is positive, which
// pins the otherwise arbitrary sign of singular vectors.
void fix_column_signs(Matrix& columns) {
    for (Index j = 0; j < columns.cols(); ++j) {
        Index at = 0;
        columns.col(j).cwiseAbs().maxCoeff(&at);
        if (columns(at, j) < 0.0) columns.col(j) = -columns.col(j);
    }
}

Index numeric_rank(const Vector& singular_values, Index rows, Index cols) {
    if (singular_values.size() == 0) return 0;
    const double tol = static_cast<double>(std::max(rows, cols)) *
                       std::numeric_limits<double>::epsilon() * singular_values(0);
    Index rank = 0;
    for (Index i = 0; i < singular_values.size(); ++i) {
        if (singular_values(i) > tol) ++rank;
    }
    return rank;
}

}  // namespace

LocalTransform fit_local_transform(const DataMatrix& data, Index target_dim, bool standardize) {
    const Index rows = data.rows();
    const Index cols = data.cols();
    if (target_dim < 1 || target_dim > std::min(rows, cols)) {
        throw ConfigError("target_dim " + std::to_string(target_dim) +
                          " out of range for a " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix");
    }

    LocalTransform transform;
    transform.centering = column_means(data.values);
    transform.scaling = Vector::Ones(cols);
    if (standardize) {
        for (Index j = 0; j < cols; ++j) {
            const double var =
                (data.values.col(j).array() - transform.centering(j)).square().sum() /
                static_cast<double>(rows);
            const double sd = std::sqrt(var);
            transform.scaling(j) = sd > 0.0 ? sd : 1.0;
        }
    }

    Matrix standardized = (data.values.rowwise() - transform.centering.transpose());
    standardized.array().rowwise() /= transform.scaling.transpose().array();

    Eigen::JacobiSVD<Matrix> svd(standardized, Eigen::ComputeThinV);
    const Index rank = numeric_rank(svd.singularValues(), rows, cols);
    if (rank < target_dim) {
        throw NumericError("input rank " + std::to_string(rank) +
                           " is below the requested dimension " + std::to_string(target_dim));
    }

    transform.projection = svd.matrixV().leftCols(target_dim);
    fix_column_signs(transform.projection);
    return transform;
}

Matrix apply_transform(const LocalTransform& transform, const Matrix& values) {
    if (values.cols() != transform.input_dim()) {
        throw DataError("transform expects width " + std::to_string(transform.input_dim()) +
                        ", got " + std::to_string(values.cols()));
    }
    Matrix standardized = (values.rowwise() - transform.centering.transpose());
    standardized.array().rowwise() /= transform.scaling.transpose().array();
    return standardized * transform.projection;
}

DataMatrix apply_transform(const LocalTransform& transform, const DataMatrix& data) {
    DataMatrix out;
    out.values = apply_transform(transform, data.values);
    out.feature_names.reserve(static_cast<std::size_t>(out.values.cols()));
    for (Index j = 0; j < out.values.cols(); ++j) {
        out.feature_names.push_back("z" + std::to_string(j));
    }
    return out;
}

Vector apply_transform(const LocalTransform& transform, const Vector& point) {
    Matrix row(1, point.size());
    row.row(0) = point.transpose();
    return apply_transform(transform, row).row(0).transpose();
}

IntegrationFit fit_integration(const std::vector<Matrix>& anchor_reps, Index target_dim) {
    if (anchor_reps.empty()) throw ConfigError("no anchor representations given");
    const Index anchor_count = anchor_reps.front().rows();
    Index total_width = 0;
    for (const Matrix& rep : anchor_reps) {
        if (rep.rows() != anchor_count) {
            throw DataError("anchor representations have inconsistent row counts");
        }
        total_width += rep.cols();
    }
    if (target_dim < 1 || target_dim > total_width) {
        throw ConfigError("collaboration dimension " + std::to_string(target_dim) +
                          " out of range (concatenated width " + std::to_string(total_width) +
                          ")");
    }

    const Matrix concatenated = hstack(anchor_reps);
    Eigen::JacobiSVD<Matrix> svd(concatenated, Eigen::ComputeThinU);
    const Index rank = numeric_rank(svd.singularValues(), concatenated.rows(),
                                    concatenated.cols());
    if (rank < target_dim) {
        throw NumericError("concatenated anchor representations have rank " +
                           std::to_string(rank) + ", below collaboration dimension " +
                           std::to_string(target_dim));
    }

    // Target coordinates, not bare singular vectors: scaling each column by
    // its singular value keeps the shared space metrically faithful to the
    // concatenated representations. With a single party the least-squares
    // map below then reduces to a pure rotation.
    IntegrationFit fit;
    fit.target = svd.matrixU().leftCols(target_dim);
    fix_column_signs(fit.target);
    fit.target *= svd.singularValues().head(target_dim).asDiagonal();

    fit.maps.reserve(anchor_reps.size());
    for (const Matrix& rep : anchor_reps) {
        IntegrationMap map;
        map.matrix = rep.completeOrthogonalDecomposition().solve(fit.target);
        map.residual = (rep * map.matrix - fit.target).rowwise().norm().maxCoeff();
        fit.maps.push_back(std::move(map));
    }
    return fit;
}

}  // namespace dcshap
