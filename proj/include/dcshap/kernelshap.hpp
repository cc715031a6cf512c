#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dcshap/matrix.hpp"

namespace dcshap {

/// Batched black-box predictor: rows of inputs in, one fraction per row out.
using ModelFn = std::function<Vector(const Matrix&)>;

/// The full coalition power set in binary-counting order: row i includes
/// feature j iff bit j of i is set. Row 0 (empty set) and the last row (full
/// set) carry no finite kernel weight; they enter the solve as hard
/// constraints instead, so their weight entries are zero.
struct CoalitionDesign {
    Index feature_count = 0;
    Matrix masks;
    Vector weights;

    Index rows() const { return masks.rows(); }
    bool is_constraint_row(Index row) const { return row == 0 || row == rows() - 1; }
};

/// Shapley kernel value (M-1) / (C(M,s) * s * (M-s)) for 0 < s < M.
double shapley_kernel_weight(Index feature_count, Index subset_size);

/// All 2^M coalitions with weights. M is capped at 20; past that the exact
/// power set does not fit and sampling approximations are out of scope here.
CoalitionDesign enumerate_coalitions(Index feature_count);

struct ExplanationRequest {
    Vector x;  ///< instance being explained
    Vector r;  ///< reference ("absent feature") values
    ModelFn model;
    std::vector<std::string> feature_names;  ///< optional; f0, f1, ... when empty
};

/// One synthetic input row per coalition: x where the mask is on, r where off.
Matrix build_synthetic_inputs(const ExplanationRequest& request,
                              const CoalitionDesign& design);

struct Attribution {
    double base = 0.0;       ///< model value at r
    double predicted = 0.0;  ///< model value at x
    Vector phi;
    std::vector<std::string> feature_names;
    Vector feature_values;
    std::string role;  ///< protocol tag; empty for plain explanations
};

/// Weighted least squares over the interior coalition rows under the hard
/// constraints phi0 = y(empty) and sum(phi) = y(full) - y(empty), the latter
/// eliminated by substitution.
Attribution solve_attribution(const CoalitionDesign& design, const Vector& y);

/// enumerate -> build -> one batched model call -> solve.
Attribution explain(const ExplanationRequest& request);

/// Process-wide ledger of the local-accuracy identity. Every solve records
/// |base + sum(phi) - predicted| here so a whole run can be audited at once.
struct EfficiencyAudit {
    static void record(double gap);
    static long long count();
    static double worst_gap();
    static void reset();
};

}  // namespace dcshap
