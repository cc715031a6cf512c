#pragma once

#include <memory>
#include <vector>

#include "dcshap/matrix.hpp"

namespace dcshap {

/// Exact nearest-neighbor backends. Every backend returns the identical
/// neighbor set: squared Euclidean distance with ties broken by the lowest
/// training-point index, and per-point arithmetic is shared so results are
/// bit-equal. kSerial is the reference implementation; kParallel runs the
/// same per-query routine under OpenMP; kKdTree prunes the scan with an
/// exact tree.
enum class KnnBackend { kAuto, kSerial, kParallel, kKdTree };

struct Neighbor {
    double dist2 = 0.0;
    Index index = 0;

    friend bool operator<(const Neighbor& a, const Neighbor& b) {
        return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
    }
};

/// Exact kd-tree over the rows of a point matrix. Queries agree bit-for-bit
/// with the brute-force scan because leaves reuse the same distance kernel
/// and the (dist2, index) order makes the k-best set unique. The tree keeps
/// its own copy of the points, so it stays valid when the source moves.
class KdTree {
  public:
    explicit KdTree(Matrix points, Index leaf_size = 24);

    /// The k nearest rows to `query`, sorted by (dist2, index).
    std::vector<Neighbor> search(const Vector& query, int k) const;

    Index size() const { return points_.rows(); }

  private:
    struct Node {
        Index begin = 0, end = 0;       // range into order_
        Index left = -1, right = -1;    // children; leaf when left < 0
        Vector box_lo, box_hi;
    };

    Index build(Index begin, Index end);
    void search_node(Index node_index, const Vector& query, int k,
                     std::vector<Neighbor>& heap) const;

    Matrix points_;
    Index leaf_size_;
    std::vector<Index> order_;
    std::vector<Node> nodes_;
};

/// Brute-force k nearest neighbors of one query row; the reference kernel.
std::vector<Neighbor> knn_scan(const Matrix& points, const Vector& query, int k);

/// The shared predictor h: k-nearest-neighbor classification over the
/// unified collaboration space. Immutable once finalized; prediction over
/// many query rows is data-parallel.
struct CollaborationModel {
    int k = 7;
    Matrix training_points;
    std::vector<int> training_labels;
    int positive_class = 1;

    /// Builds the kd-tree index; must be called after the fields are set.
    void finalize();

    Index unified_dim() const { return training_points.cols(); }

    /// Fraction of the k nearest training points labeled positive_class,
    /// one value per query row.
    Vector predict_proba(const Matrix& queries, KnnBackend backend = KnnBackend::kAuto) const;

    /// Majority vote among the k nearest; ties pick the smallest class id.
    std::vector<int> predict_labels(const Matrix& queries,
                                    KnnBackend backend = KnnBackend::kAuto) const;

    double accuracy(const Matrix& queries, const std::vector<int>& expected,
                    KnnBackend backend = KnnBackend::kAuto) const;

    const KdTree* tree() const { return tree_.get(); }

  private:
    std::vector<Neighbor> neighbors_of(const Vector& query, KnnBackend backend) const;
    std::shared_ptr<const KdTree> tree_;
};

}  // namespace dcshap
