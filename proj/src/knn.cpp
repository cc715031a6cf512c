#include "dcshap/knn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

// Squared Euclidean distance accumulated in ascending feature order. Every
// backend funnels through the same accumulation order, which is what makes
// their results bit-equal.
inline double row_dist2(const Matrix& points, Index row, const Vector& query) {
    double acc = 0.0;
    for (Index d = 0; d < points.cols(); ++d) {
        const double diff = points(row, d) - query[d];
        acc += diff * diff;
    }
    return acc;
}

inline void offer(std::vector<Neighbor>& heap, int k, Neighbor candidate) {
    if (static_cast<int>(heap.size()) < k) {
        heap.push_back(candidate);
        std::push_heap(heap.begin(), heap.end());
    } else if (candidate < heap.front()) {
        std::pop_heap(heap.begin(), heap.end());
        heap.back() = candidate;
        std::push_heap(heap.begin(), heap.end());
    }
}

inline std::vector<Neighbor> finish(std::vector<Neighbor> heap) {
    std::sort(heap.begin(), heap.end());
    return heap;
}

void check_query(const Matrix& points, const Vector& query, int k) {
    if (k < 1) throw ConfigError("k must be at least 1");
    if (k > points.rows())
        throw ConfigError("k exceeds the number of training points");
    if (query.size() != points.cols())
        throw DataError("query dimension does not match the training points");
}

}  // namespace

std::vector<Neighbor> knn_scan(const Matrix& points, const Vector& query, int k) {
    check_query(points, query, k);
    const Index n = points.rows();
    const Index dims = points.cols();

    std::vector<Neighbor> heap;
    heap.reserve(static_cast<size_t>(k) + 1);

    // Blocked over rows so the inner loop runs down contiguous columns.
    // Each row's sum still accumulates in ascending feature order, matching
    // row_dist2 exactly.
    constexpr Index kBlock = 128;
    double acc[kBlock];
    for (Index r0 = 0; r0 < n; r0 += kBlock) {
        const Index count = std::min(kBlock, n - r0);
        std::fill(acc, acc + count, 0.0);
        for (Index d = 0; d < dims; ++d) {
            const double* col = points.data() + d * n + r0;
            const double qd = query[d];
            for (Index i = 0; i < count; ++i) {
                const double diff = col[i] - qd;
                acc[i] += diff * diff;
            }
        }
        for (Index i = 0; i < count; ++i)
            offer(heap, k, Neighbor{acc[i], r0 + i});
    }
    return finish(std::move(heap));
}

KdTree::KdTree(Matrix points, Index leaf_size)
    : points_(std::move(points)), leaf_size_(std::max<Index>(1, leaf_size)) {
    order_.resize(points_.rows());
    std::iota(order_.begin(), order_.end(), Index{0});
    if (!order_.empty()) {
        nodes_.reserve(static_cast<size_t>(2 * points_.rows() / leaf_size_ + 2));
        build(0, points_.rows());
    }
}

Index KdTree::build(Index begin, Index end) {
    const Index node_index = static_cast<Index>(nodes_.size());
    nodes_.emplace_back();
    Node node;
    node.begin = begin;
    node.end = end;

    const Index dims = points_.cols();
    node.box_lo = Vector::Constant(dims, std::numeric_limits<double>::infinity());
    node.box_hi = Vector::Constant(dims, -std::numeric_limits<double>::infinity());
    for (Index i = begin; i < end; ++i) {
        const Index row = order_[i];
        for (Index d = 0; d < dims; ++d) {
            const double v = points_(row, d);
            node.box_lo[d] = std::min(node.box_lo[d], v);
            node.box_hi[d] = std::max(node.box_hi[d], v);
        }
    }

    if (end - begin > leaf_size_) {
        Index split_dim = 0;
        double best_spread = -1.0;
        for (Index d = 0; d < dims; ++d) {
            const double spread = node.box_hi[d] - node.box_lo[d];
            if (spread > best_spread) {
                best_spread = spread;
                split_dim = d;
            }
        }
        if (best_spread > 0.0) {
            const Index mid = begin + (end - begin) / 2;
            std::nth_element(order_.begin() + begin, order_.begin() + mid,
                             order_.begin() + end, [&](Index a, Index b) {
                                 const double ca = points_(a, split_dim);
                                 const double cb = points_(b, split_dim);
                                 return ca < cb || (ca == cb && a < b);
                             });
            node.left = build(begin, mid);
            node.right = build(mid, end);
        }
    }

    nodes_[node_index] = std::move(node);
    return node_index;
}

void KdTree::search_node(Index node_index, const Vector& query, int k,
                         std::vector<Neighbor>& heap) const {
    const Node& node = nodes_[node_index];

    if (static_cast<int>(heap.size()) == k) {
        // Lower bound on any point distance inside the box, accumulated in
        // the same feature order as row_dist2 so it never exceeds the true
        // value. Prune only on a strict excess: a point at exactly the
        // current worst distance could still win its index tie.
        double bound = 0.0;
        for (Index d = 0; d < query.size(); ++d) {
            double off = 0.0;
            if (query[d] < node.box_lo[d]) off = node.box_lo[d] - query[d];
            else if (query[d] > node.box_hi[d]) off = query[d] - node.box_hi[d];
            bound += off * off;
        }
        if (bound > heap.front().dist2) return;
    }

    if (node.left < 0) {
        for (Index i = node.begin; i < node.end; ++i) {
            const Index row = order_[i];
            offer(heap, k, Neighbor{row_dist2(points_, row, query), row});
        }
        return;
    }

    // Visit the child whose box is nearer first; this tightens the heap
    // before the far side is tested.
    const auto box_dist2 = [&](const Node& child) {
        double bound = 0.0;
        for (Index d = 0; d < query.size(); ++d) {
            double off = 0.0;
            if (query[d] < child.box_lo[d]) off = child.box_lo[d] - query[d];
            else if (query[d] > child.box_hi[d]) off = query[d] - child.box_hi[d];
            bound += off * off;
        }
        return bound;
    };
    Index first = node.left, second = node.right;
    if (box_dist2(nodes_[second]) < box_dist2(nodes_[first])) std::swap(first, second);
    search_node(first, query, k, heap);
    search_node(second, query, k, heap);
}

std::vector<Neighbor> KdTree::search(const Vector& query, int k) const {
    check_query(points_, query, k);
    std::vector<Neighbor> heap;
    heap.reserve(static_cast<size_t>(k) + 1);
    search_node(0, query, k, heap);
    return finish(std::move(heap));
}

void CollaborationModel::finalize() {
    if (k < 1) throw ConfigError("k must be at least 1");
    if (training_points.rows() == 0) throw DataError("training set is empty");
    if (k > training_points.rows())
        throw ConfigError("k exceeds the number of training points");
    if (static_cast<Index>(training_labels.size()) != training_points.rows())
        throw DataError("label count does not match the training points");
    tree_ = std::make_shared<const KdTree>(training_points);
}

std::vector<Neighbor> CollaborationModel::neighbors_of(const Vector& query,
                                                       KnnBackend backend) const {
    // The blocked scan vectorizes across points and beats the tree once the
    // space has more than a handful of dimensions, so it is the default.
    if (backend == KnnBackend::kAuto)
        backend = (tree_ && training_points.cols() <= 3) ? KnnBackend::kKdTree
                                                         : KnnBackend::kParallel;
    if (backend == KnnBackend::kKdTree) {
        if (!tree_) throw ConfigError("model was not finalized");
        return tree_->search(query, k);
    }
    return knn_scan(training_points, query, k);
}

Vector CollaborationModel::predict_proba(const Matrix& queries, KnnBackend backend) const {
    if (!tree_) throw ConfigError("model was not finalized");
    if (queries.cols() != training_points.cols())
        throw DataError("query dimension does not match the training points");
    const Index n = queries.rows();
    Vector out(n);
    const bool threaded = backend != KnnBackend::kSerial && n > 1;

#pragma omp parallel for schedule(static) if (threaded)
    for (Index q = 0; q < n; ++q) {
        const Vector query = queries.row(q);
        const auto neighbors = neighbors_of(query, backend);
        int positives = 0;
        for (const auto& nb : neighbors)
            if (training_labels[static_cast<size_t>(nb.index)] == positive_class)
                ++positives;
        out[q] = static_cast<double>(positives) / static_cast<double>(k);
    }
    return out;
}

std::vector<int> CollaborationModel::predict_labels(const Matrix& queries,
                                                    KnnBackend backend) const {
    if (!tree_) throw ConfigError("model was not finalized");
    if (queries.cols() != training_points.cols())
        throw DataError("query dimension does not match the training points");
    const Index n = queries.rows();
    std::vector<int> out(static_cast<size_t>(n));
    const bool threaded = backend != KnnBackend::kSerial && n > 1;

#pragma omp parallel for schedule(static) if (threaded)
    for (Index q = 0; q < n; ++q) {
        const Vector query = queries.row(q);
        const auto neighbors = neighbors_of(query, backend);
        std::map<int, int> votes;
        for (const auto& nb : neighbors)
            ++votes[training_labels[static_cast<size_t>(nb.index)]];
        int best_label = 0, best_count = -1;
        for (const auto& [label, count] : votes) {
            if (count > best_count) {  // map iterates labels ascending
                best_count = count;
                best_label = label;
            }
        }
        out[static_cast<size_t>(q)] = best_label;
    }
    return out;
}

double CollaborationModel::accuracy(const Matrix& queries, const std::vector<int>& expected,
                                    KnnBackend backend) const {
    if (static_cast<Index>(expected.size()) != queries.rows())
        throw DataError("expected-label count does not match the query rows");
    if (expected.empty()) throw DataError("accuracy over an empty query set");
    const auto got = predict_labels(queries, backend);
    Index hits = 0;
    for (size_t i = 0; i < expected.size(); ++i)
        if (got[i] == expected[i]) ++hits;
    return static_cast<double>(hits) / static_cast<double>(expected.size());
}

}  // namespace dcshap
