#pragma once

#include <string>
#include <vector>

#include "dcshap/kernelshap.hpp"
#include "dcshap/matrix.hpp"

namespace dcshap {

/// Static SVG renderers. Output depends only on the inputs (fixed layout,
/// fixed decimal formatting), so re-rendering the same data is byte-stable.

/// Horizontal grouped bars: one row per label, one bar per series, signed
/// values growing left/right of a zero line.
std::string svg_grouped_bars(const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& series_labels,
                             const Matrix& values, const std::string& title);

/// Scatter of paired values with a y=x guide line.
std::string svg_scatter(const Vector& x, const Vector& y, const std::string& x_label,
                        const std::string& y_label, const std::string& title);

/// Additive-contribution strip: segments stack from the base value to the
/// prediction, colored by sign, widest contributions labeled.
std::string svg_force_plot(const Attribution& attribution, const std::string& title);

}  // namespace dcshap
