#pragma once

#include <filesystem>
#include <string>

#include "dcshap/kernelshap.hpp"
#include "dcshap/knn.hpp"
#include "dcshap/matrix.hpp"
#include "dcshap/rng.hpp"

namespace dcshap::testing {

inline Matrix random_matrix(Rng& rng, Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
    return m;
}

inline Vector random_vector(Rng& rng, Index size) {
    Vector v(size);
    for (Index i = 0; i < size; ++i) v[i] = rng.gaussian();
    return v;
}

/// Linear term plus one random pairwise product, so the function is cheap,
/// smooth, and not additively separable.
inline ModelFn random_model(Rng& rng, Index features) {
    Vector weights = random_vector(rng, features);
    const Index a = static_cast<Index>(rng.below(static_cast<std::uint64_t>(features)));
    const Index b = static_cast<Index>(rng.below(static_cast<std::uint64_t>(features)));
    const double cross = rng.uniform(-1.0, 1.0);
    return [weights, a, b, cross](const Matrix& rows) {
        Vector out = rows * weights;
        out.array() += cross * rows.col(a).array() * rows.col(b).array();
        return out;
    };
}

/// Small kNN probability surface over random training data.
inline ModelFn random_knn_model(Rng& rng, Index features, Index rows = 40) {
    auto model = std::make_shared<CollaborationModel>();
    model->k = 3;
    model->training_points = random_matrix(rng, rows, features);
    model->training_labels.resize(static_cast<size_t>(rows));
    for (auto& label : model->training_labels) label = static_cast<int>(rng.below(2));
    model->finalize();
    return [model](const Matrix& queries) { return model->predict_proba(queries); };
}

/// Fresh empty directory under the test's working directory.
inline std::string scratch_dir(const std::string& name) {
    const std::filesystem::path dir = std::filesystem::path("scratch") / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

}  // namespace dcshap::testing
