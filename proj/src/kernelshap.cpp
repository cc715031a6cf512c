#include "dcshap/kernelshap.hpp"

#include <Eigen/Cholesky>
#include <atomic>
#include <cmath>
#include <cstdint>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

constexpr Index kCoalitionCap = 20;

std::uint64_t binomial(Index n, Index k) {
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (Index i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) /
                                       static_cast<std::uint64_t>(i);
    return c;
}

std::atomic<long long> g_audit_count{0};
std::atomic<double> g_audit_worst{0.0};

}  // namespace

double shapley_kernel_weight(Index feature_count, Index subset_size) {
    if (feature_count < 2 || feature_count > kCoalitionCap)
        throw ConfigError("kernel weight needs 2 to 20 features");
    if (subset_size <= 0 || subset_size >= feature_count)
        throw ConfigError("empty and full coalitions are constraint rows, not weighted rows");
    const double denom = static_cast<double>(binomial(feature_count, subset_size)) *
                         static_cast<double>(subset_size) *
                         static_cast<double>(feature_count - subset_size);
    return static_cast<double>(feature_count - 1) / denom;
}

CoalitionDesign enumerate_coalitions(Index feature_count) {
    if (feature_count < 1) throw ConfigError("need at least one feature");
    if (feature_count > kCoalitionCap)
        throw ConfigError("more than 20 features would need 2^M coalition rows; "
                          "sampling-based approximation is out of scope");

    CoalitionDesign design;
    design.feature_count = feature_count;
    const Index rows = Index{1} << feature_count;
    design.masks.setZero(rows, feature_count);
    design.weights.setZero(rows);
    for (Index i = 0; i < rows; ++i) {
        Index size = 0;
        for (Index j = 0; j < feature_count; ++j) {
            if ((i >> j) & 1) {
                design.masks(i, j) = 1.0;
                ++size;
            }
        }
        if (size > 0 && size < feature_count)
            design.weights[i] = shapley_kernel_weight(feature_count, size);
    }
    return design;
}

Matrix build_synthetic_inputs(const ExplanationRequest& request,
                              const CoalitionDesign& design) {
    const Index m = design.feature_count;
    if (request.x.size() != m || request.r.size() != m)
        throw DataError("instance and reference must match the coalition width");
    Matrix synthetic(design.rows(), m);
    for (Index i = 0; i < design.rows(); ++i)
        for (Index j = 0; j < m; ++j)
            synthetic(i, j) = design.masks(i, j) != 0.0 ? request.x[j] : request.r[j];
    return synthetic;
}

Attribution solve_attribution(const CoalitionDesign& design, const Vector& y) {
    const Index m = design.feature_count;
    const Index rows = design.rows();
    if (y.size() != rows)
        throw DataError("prediction vector does not match the coalition count");

    Attribution out;
    out.base = y[0];
    out.predicted = y[rows - 1];
    const double delta = out.predicted - out.base;
    out.phi = Vector::Zero(m);

    if (m == 1) {
        out.phi[0] = delta;
    } else {
        // Substituting phi_{m-1} = delta - sum(others) into the weighted
        // regression leaves an (m-1)-dim positive-definite normal system.
        Matrix gram = Matrix::Zero(m - 1, m - 1);
        Vector moment = Vector::Zero(m - 1);
        Vector row(m - 1);
        for (Index s = 1; s < rows - 1; ++s) {
            const double w = design.weights[s];
            const double last = design.masks(s, m - 1);
            for (Index j = 0; j < m - 1; ++j) row[j] = design.masks(s, j) - last;
            const double target = y[s] - out.base - last * delta;
            gram.selfadjointView<Eigen::Lower>().rankUpdate(row, w);
            moment += (w * target) * row;
        }
        const Matrix full = gram.selfadjointView<Eigen::Lower>();
        Eigen::LLT<Matrix> llt(full);
        if (llt.info() != Eigen::Success)
            throw NumericError("reduced coalition system is not positive definite");
        out.phi.head(m - 1) = llt.solve(moment);
        out.phi[m - 1] = delta - out.phi.head(m - 1).sum();
    }

    EfficiencyAudit::record(std::abs(out.base + out.phi.sum() - out.predicted));
    return out;
}

Attribution explain(const ExplanationRequest& request) {
    if (request.x.size() != request.r.size())
        throw DataError("instance and reference lengths differ");
    if (!request.model) throw ConfigError("no model callback supplied");
    if (!request.feature_names.empty() &&
        static_cast<Index>(request.feature_names.size()) != request.x.size())
        throw DataError("feature name count does not match the instance length");

    const CoalitionDesign design = enumerate_coalitions(request.x.size());
    const Matrix synthetic = build_synthetic_inputs(request, design);
    const Vector y = request.model(synthetic);
    if (y.size() != design.rows())
        throw DataError("model returned the wrong number of predictions");

    Attribution out = solve_attribution(design, y);
    out.feature_values = request.x;
    if (request.feature_names.empty()) {
        for (Index j = 0; j < request.x.size(); ++j)
            out.feature_names.push_back("f" + std::to_string(j));
    } else {
        out.feature_names = request.feature_names;
    }
    return out;
}

void EfficiencyAudit::record(double gap) {
    g_audit_count.fetch_add(1, std::memory_order_relaxed);
    double seen = g_audit_worst.load(std::memory_order_relaxed);
    while (gap > seen &&
           !g_audit_worst.compare_exchange_weak(seen, gap, std::memory_order_relaxed)) {
    }
}

long long EfficiencyAudit::count() { return g_audit_count.load(); }

double EfficiencyAudit::worst_gap() { return g_audit_worst.load(); }

void EfficiencyAudit::reset() {
    g_audit_count.store(0);
    g_audit_worst.store(0.0);
}

}  // namespace dcshap
