#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "dcshap/error.hpp"
#include "dcshap/knn.hpp"
#include "dcshap/rng.hpp"
#include "support/test_util.hpp"

using namespace dcshap;

TEST_CASE("brute-force scan returns squared distances in (dist2, index) order") {
    Matrix points(4, 2);
    points << 0, 0, 3, 4, 1, 0, 0, 2;
    Vector query(2);
    query << 0, 0;

    const auto n = knn_scan(points, query, 3);
    REQUIRE(n.size() == 3);
    CHECK(n[0].index == 0);
    CHECK(n[0].dist2 == 0.0);
    CHECK(n[1].index == 2);
    CHECK(n[1].dist2 == 1.0);
    CHECK(n[2].index == 3);
    CHECK(n[2].dist2 == 4.0);
}

TEST_CASE("equal distances break ties toward the lower index") {
    Matrix points(3, 1);
    points << 1, -1, 1;  // rows 0 and 2 coincide
    Vector query(1);
    query << 0;

    const auto n = knn_scan(points, query, 2);
    CHECK(n[0].index == 0);
    CHECK(n[1].index == 1);  // -1 ties with row 2; lower index wins

    const auto all = knn_scan(points, query, 3);
    CHECK(all[1].index == 1);
    CHECK(all[2].index == 2);
}

TEST_CASE("scan rejects bad query parameters") {
    Matrix points(2, 1);
    points << 5, 6;
    Vector query(1);
    query << 0;
    CHECK_THROWS_AS(knn_scan(points, query, 10), ConfigError);
    CHECK_THROWS_AS(knn_scan(points, query, 0), ConfigError);
    CHECK_THROWS_AS(knn_scan(points, Vector::Zero(2), 1), DataError);
    CHECK(knn_scan(points, query, 2).size() == 2);
}

TEST_CASE("kd-tree matches the scan bit for bit on tie-heavy data") {
    // Integer lattice coordinates plus duplicated rows produce many exact
    // distance ties, the case where backend disagreement would show up.
    Rng rng(321);
    Matrix points(120, 3);
    for (Index i = 0; i < points.rows(); ++i)
        for (Index j = 0; j < points.cols(); ++j)
            points(i, j) = static_cast<double>(rng.below(4));
    for (Index i = 0; i < 20; ++i) points.row(100 + i) = points.row(i);

    const KdTree tree(points);
    for (int trial = 0; trial < 50; ++trial) {
        Vector query(3);
        for (Index j = 0; j < 3; ++j) query[j] = static_cast<double>(rng.below(5)) - 0.5;
        const auto expected = knn_scan(points, query, 7);
        const auto actual = tree.search(query, 7);
        REQUIRE(actual.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(actual[i].index == expected[i].index);
            CHECK(actual[i].dist2 == expected[i].dist2);
        }
    }
}

namespace {

CollaborationModel lattice_model(Rng& rng, Index rows, Index cols, int k) {
    CollaborationModel model;
    model.k = k;
    model.training_points = Matrix(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            model.training_points(i, j) = static_cast<double>(rng.below(3));
    model.training_labels.resize(static_cast<std::size_t>(rows));
    for (auto& label : model.training_labels) label = static_cast<int>(rng.below(2));
    model.finalize();
    return model;
}

}  // namespace

TEST_CASE("all prediction backends agree exactly") {
    Rng rng(99);
    const CollaborationModel model = lattice_model(rng, 90, 4, 5);
    const Matrix queries = testing::random_matrix(rng, 40, 4);

    const Vector serial = model.predict_proba(queries, KnnBackend::kSerial);
    const Vector parallel = model.predict_proba(queries, KnnBackend::kParallel);
    const Vector tree = model.predict_proba(queries, KnnBackend::kKdTree);
    const Vector chosen = model.predict_proba(queries);
    CHECK(serial == parallel);
    CHECK(serial == tree);
    CHECK(serial == chosen);

    CHECK(model.predict_labels(queries, KnnBackend::kSerial) ==
          model.predict_labels(queries, KnnBackend::kKdTree));
}

TEST_CASE("probability is the positive fraction among the k nearest") {
    CollaborationModel model;
    model.k = 3;
    model.training_points = Matrix(4, 1);
    model.training_points << 0, 1, 2, 10;
    model.training_labels = {1, 0, 1, 0};
    model.finalize();

    Matrix query(1, 1);
    query << 0.4;  // neighbors are rows 0, 1, 2
    CHECK(model.predict_proba(query)[0] == doctest::Approx(2.0 / 3.0));
    CHECK(model.predict_labels(query)[0] == 1);
}

TEST_CASE("label votes tie toward the smallest class id") {
    CollaborationModel model;
    model.k = 2;
    model.training_points = Matrix(2, 1);
    model.training_points << -1, 1;
    model.training_labels = {1, 0};
    model.finalize();

    Matrix query(1, 1);
    query << 0.0;
    CHECK(model.predict_labels(query)[0] == 0);
}

TEST_CASE("accuracy counts exact label matches") {
    CollaborationModel model;
    model.k = 1;
    model.training_points = Matrix(2, 1);
    model.training_points << 0, 10;
    model.training_labels = {0, 1};
    model.finalize();

    Matrix queries(4, 1);
    queries << 1, 2, 9, 11;
    CHECK(model.accuracy(queries, {0, 0, 1, 1}) == 1.0);
    CHECK(model.accuracy(queries, {0, 1, 1, 0}) == 0.5);
}

TEST_CASE("model validation catches unusable configurations") {
    CollaborationModel model;
    model.k = 2;
    model.training_points = Matrix(3, 2);
    model.training_points.setZero();
    model.training_labels = {0, 1};  // one short
    CHECK_THROWS_AS(model.finalize(), DataError);

    model.training_labels = {0, 1, 1};
    model.k = 0;
    CHECK_THROWS_AS(model.finalize(), ConfigError);
    model.k = 4;  // more neighbors than points
    CHECK_THROWS_AS(model.finalize(), ConfigError);

    model.k = 2;
    model.finalize();
    CHECK_THROWS_AS(model.predict_proba(Matrix::Zero(1, 3)), DataError);

    CollaborationModel unfinalized;
    unfinalized.k = 1;
    unfinalized.training_points = Matrix::Zero(2, 1);
    unfinalized.training_labels = {0, 1};
    CHECK_THROWS_AS(unfinalized.predict_proba(Matrix::Zero(1, 1), KnnBackend::kKdTree),
                    ConfigError);
}
