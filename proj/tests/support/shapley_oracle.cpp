#include "shapley_oracle.hpp"

#include <cstdint>
#include <vector>

#include "dcshap/error.hpp"

namespace dcshap::testing {

OracleResult brute_force_shapley(const ModelFn& model, const Vector& x, const Vector& r) {
    const int m = static_cast<int>(x.size());
    if (m < 1 || m > 20) throw ConfigError("oracle supports 1..20 features");
    const std::uint32_t subsets = 1u << m;

    Matrix inputs(subsets, m);
    for (std::uint32_t mask = 0; mask < subsets; ++mask)
        for (int j = 0; j < m; ++j)
            inputs(mask, j) = ((mask >> j) & 1u) != 0 ? x[j] : r[j];
    const Vector value = model(inputs);

    std::vector<double> factorial(static_cast<size_t>(m) + 1, 1.0);
    for (int i = 1; i <= m; ++i) factorial[static_cast<size_t>(i)] = factorial[static_cast<size_t>(i - 1)] * i;

    OracleResult result;
    result.base = value[0];
    result.predicted = value[subsets - 1];
    result.phi = Vector::Zero(m);
    for (int j = 0; j < m; ++j) {
        const std::uint32_t bit = 1u << j;
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            if ((mask & bit) != 0) continue;
            const int s = __builtin_popcount(mask);
            const double weight = factorial[static_cast<size_t>(s)] *
                                  factorial[static_cast<size_t>(m - 1 - s)] /
                                  factorial[static_cast<size_t>(m)];
            result.phi[j] += weight * (value[mask | bit] - value[mask]);
        }
    }
    return result;
}

}  // namespace dcshap::testing
