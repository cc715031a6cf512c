#pragma once

#include <string>
#include <vector>

namespace dcshap {

struct GeneratedDataset {
    std::string name;
    std::string file;  ///< file name inside the output directory
    std::string label_column;
};

/// Writes the five benchmark tables plus manifest.json into `dir`, creating
/// it if needed. The two measurement tables (iris, wine) are embedded real
/// data; the three clinical/census tables are synthetic stand-ins that keep
/// the original schemas, sizes, and class rates. Output is byte-stable:
/// generation seeds are fixed constants, not run parameters.
std::vector<GeneratedDataset> generate_datasets(const std::string& dir);

}  // namespace dcshap
