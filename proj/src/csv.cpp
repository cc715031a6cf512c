#include "dcshap/csv.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool parse_real(const std::string& cell, double& out) {
    if (cell.empty()) return false;
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + cell.size();
}

}  // namespace

LabeledDataset load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream file(path);
    if (!file) throw DataError("cannot open CSV file: " + path);

    std::string line;
    if (!std::getline(file, line)) throw DataError(path + ": no header row");
    const std::vector<std::string> header = split_line(line);

    std::vector<std::vector<std::string>> cells_by_column(header.size());
    std::size_t row_number = 1;
    while (std::getline(file, line)) {
        ++row_number;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            throw DataError(path + ": row " + std::to_string(row_number) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) cells_by_column[j].push_back(cells[j]);
    }
    if (cells_by_column.empty() || cells_by_column.front().empty()) {
        throw DataError(path + ": no data rows");
    }

    const auto label_it = std::find(header.begin(), header.end(), label_column);
    if (label_it == header.end()) {
        throw DataError(path + ": label column '" + label_column + "' not found");
    }
    const std::size_t label_index = static_cast<std::size_t>(label_it - header.begin());
    const std::size_t num_rows = cells_by_column.front().size();

    // Encode each feature column: numeric if every cell parses as a real,
    // otherwise categorical with first-seen integer codes.
    LabeledDataset ds;
    const std::size_t num_features = header.size() - 1;
    ds.features.values.resize(static_cast<Index>(num_rows), static_cast<Index>(num_features));
    ds.features.feature_names.reserve(num_features);

    Index out_col = 0;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j == label_index) continue;
        const std::vector<std::string>& column = cells_by_column[j];
        std::vector<double> parsed(num_rows);
        bool numeric = true;
        for (std::size_t i = 0; i < num_rows; ++i) {
            if (!parse_real(column[i], parsed[i])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            std::unordered_map<std::string, double> codes;
            for (std::size_t i = 0; i < num_rows; ++i) {
                const auto [it, inserted] =
                    codes.try_emplace(column[i], static_cast<double>(codes.size()));
                parsed[i] = it->second;
            }
        }
        for (std::size_t i = 0; i < num_rows; ++i) {
            ds.features.values(static_cast<Index>(i), out_col) = parsed[i];
        }
        ds.features.feature_names.push_back(header[j]);
        ++out_col;
    }

    // Class ids must not depend on row order, so the label column is encoded
    // by sorted value (numeric when possible, else lexicographic).
    const std::vector<std::string>& raw_labels = cells_by_column[label_index];
    bool numeric_labels = true;
    std::vector<double> numeric_values(num_rows);
    for (std::size_t i = 0; i < num_rows; ++i) {
        if (!parse_real(raw_labels[i], numeric_values[i])) {
            numeric_labels = false;
            break;
        }
    }
    ds.labels.resize(num_rows);
    if (numeric_labels) {
        std::map<double, int> class_ids;
        for (std::size_t i = 0; i < num_rows; ++i) class_ids.emplace(numeric_values[i], 0);
        int id = 0;
        for (auto& [value, slot] : class_ids) slot = id++;
        for (std::size_t i = 0; i < num_rows; ++i) ds.labels[i] = class_ids.at(numeric_values[i]);
    } else {
        std::map<std::string, int> class_ids;
        for (const std::string& text : raw_labels) class_ids.emplace(text, 0);
        int id = 0;
        for (auto& [text, slot] : class_ids) slot = id++;
        for (std::size_t i = 0; i < num_rows; ++i) ds.labels[i] = class_ids.at(raw_labels[i]);
    }

    ds.validate();
    return ds;
}

}  // namespace dcshap
