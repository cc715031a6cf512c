#pragma once

#include "dcshap/kernelshap.hpp"

namespace dcshap::testing {

struct OracleResult {
    double base = 0.0;       ///< value of the empty coalition
    double predicted = 0.0;  ///< value of the full coalition
    Vector phi;
};

/// Classical Shapley values of the masking game v(S) = f(x_S, r_not_S),
/// computed from the factorial-weighted marginal-contribution sum over all
/// 2^M coalitions. Independent of the weighted-regression solver under test.
OracleResult brute_force_shapley(const ModelFn& model, const Vector& x, const Vector& r);

}  // namespace dcshap::testing
