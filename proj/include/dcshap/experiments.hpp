#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcshap/dataset.hpp"
#include "dcshap/dc.hpp"
#include "dcshap/dcshap.hpp"
#include "dcshap/messages.hpp"

namespace dcshap {

struct ManifestEntry {
    std::string path;  ///< resolved against the manifest's own directory
    std::string label_column;
};

std::map<std::string, ManifestEntry> load_manifest(const std::string& path);

/// Collaboration hyperparameters; -1 dimensions pick the defaults
/// (ceil(3n/4) locally, smallest local width for the shared space).
struct DcParams {
    Index local_dim = -1;
    Index unified_dim = -1;
    Index anchor_count = 2000;
    int k = 7;
    int positive_class = 1;
    bool standardize = true;
    AggregateStat reference_stat = AggregateStat::kMedian;
};

struct ExperimentConfig {
    std::string dataset;
    std::string manifest_path;
    std::vector<std::uint64_t> seeds{0};
    Index n_explain = 0;  ///< 0 picks the driver's default
    double test_fraction = 1.0 / 3.0;
    std::string output_dir = ".";
    std::optional<PartitionSpec> partition;  ///< absent picks the driver's default
    DcParams dc;
};

ExperimentConfig config_from_json_file(const std::string& path);

/// Biased two-party scenario: per-user explanations with own models and own
/// baselines against shared-model explanations, scored by how often the two
/// users assign a (sample, feature) pair opposite signs.
struct ContradictionReport {
    std::uint64_t seed = 0;
    std::vector<std::string> feature_names;
    std::vector<long long> own_per_feature;
    std::vector<long long> dc_per_feature;
    long long own_total = 0;
    long long dc_total = 0;
    Index samples = 0;
    std::vector<Index> party_sizes;
    std::vector<double> party_positive_rates;

    struct SampleDetail {
        Index sample = 0;
        Matrix own;  ///< features x 2 users
        Matrix dc;
    };
    std::vector<SampleDetail> top_samples;
    std::vector<std::string> artifacts;  ///< file names relative to output_dir
};

/// Two-user agreement study: per-feature RMSE between the users'
/// attributions, for own-model explanations and for shared-model
/// explanations, aggregated over seeds.
struct ConsistencyReport {
    std::string dataset;
    Index n_features = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> feature_names;
    std::vector<double> per_seed_kernel_rmse;  ///< mean over features, one per seed
    std::vector<double> per_seed_dc_rmse;
    std::vector<double> per_seed_accuracy;
    Vector kernel_rmse_per_feature;  ///< mean over seeds
    Vector dc_rmse_per_feature;
    double kernel_rmse_mean = 0.0, kernel_rmse_std = 0.0;
    double dc_rmse_mean = 0.0, dc_rmse_std = 0.0;
    double dc_accuracy = 0.0;
    std::vector<std::string> artifacts;
};

/// Column-partition study: full third-party explanations against the two
/// partial views, plus the aggregated-indicator diagnostics and the message
/// audit trail.
struct VerticalReport {
    std::uint64_t seed = 0;
    std::vector<std::string> feature_names;
    std::vector<int> owner;  ///< party index per raw feature
    Matrix full_phi;         ///< samples x features (third-party protocol)
    Matrix partial_phi;      ///< same layout, host/guest partial runs combined
    Vector correlation;      ///< per feature, full vs partial
    Vector dc_feature_phi;         ///< host run, aggregated indicator per sample
    Vector guest_sum_phi;          ///< full run, sum over guest features per sample
    double dc_feature_discrepancy = 0.0;  ///< mean abs difference of the two above
    double dc_feature_correlation = 0.0;
    Index host_feature_count = 0;
    MessageLog log;
    Attribution sample_full, sample_host, sample_guest;  ///< first explained sample
    std::vector<std::string> artifacts;
};

ContradictionReport run_contradiction_demo(const ExperimentConfig& config);
ConsistencyReport run_horizontal_consistency(const ExperimentConfig& config);
VerticalReport run_vertical_consistency(const ExperimentConfig& config);

/// Writers behind the drivers: CSV + JSON + SVG with fixed names embedding
/// dataset, seed, and method; rerunning with the same inputs rewrites the
/// same bytes. Returns the files written, relative to `dir`.
std::vector<std::string> emit_report(const ContradictionReport& report,
                                     const std::string& dir);
std::vector<std::string> emit_report(const ConsistencyReport& report,
                                     const std::string& dir);
std::vector<std::string> emit_report(const VerticalReport& report, const std::string& dir);

}  // namespace dcshap
