#pragma once

namespace dcshap::embedded {

// Classic measurement tables shipped with the binary so the generator works
// offline. Row-major: 150 x 4 and 178 x 13.
inline constexpr int kIrisRows = 150, kIrisCols = 4;
inline constexpr int kWineRows = 178, kWineCols = 13;

extern const double kIrisValues[];
extern const int kIrisLabels[];
extern const double kWineValues[];
extern const int kWineLabels[];

}  // namespace dcshap::embedded
