#include "dcshap/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "dcshap/anchor.hpp"
#include "dcshap/csv.hpp"
#include "dcshap/error.hpp"
#include "dcshap/kernelshap.hpp"
#include "dcshap/serialize.hpp"
#include "dcshap/svg.hpp"
#include "json.hpp"

namespace dcshap {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string safe_name(const std::string& name) {
    std::string out;
    for (char c : name)
        out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
    return out;
}

json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

void write_artifact(const std::string& dir, const std::string& name,
                    const std::string& content, std::vector<std::string>& written) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    write_text_file((fs::path(dir) / name).string(), content);
    written.push_back(name);
}

LabeledDataset load_dataset(const ExperimentConfig& config) {
    if (config.dataset.empty()) throw ConfigError("no dataset named in the config");
    const auto manifest = load_manifest(config.manifest_path);
    const auto it = manifest.find(config.dataset);
    if (it == manifest.end())
        throw ConfigError("dataset '" + config.dataset + "' is not in the manifest");
    LabeledDataset ds = load_csv(it->second.path, it->second.label_column);
    if (config.dataset == "adult") ds = preprocess_adult(ds);
    return ds;
}

DcConfig to_dc_config(const DcParams& params) {
    DcConfig config;
    config.local_dim = params.local_dim;
    config.unified_dim = params.unified_dim;
    config.k = params.k;
    config.positive_class = params.positive_class;
    config.standardize = params.standardize;
    return config;
}

std::uint64_t single_seed(const ExperimentConfig& config) {
    if (config.seeds.empty()) throw ConfigError("the seed list is empty");
    return config.seeds.front();
}

/// What one user would run alone: a kNN over its own shard, standardized by
/// its own statistics. This is the explanation target for the own-baseline
/// comparisons.
struct LocalModel {
    Vector mean;
    Vector scale;
    CollaborationModel knn;
};

LocalModel make_local_model(const LabeledDataset& shard, int k, int positive_class) {
    LocalModel local;
    const Matrix& values = shard.features.values;
    local.mean = values.colwise().mean();
    local.scale = Vector(values.cols());
    for (Index j = 0; j < values.cols(); ++j) {
        const double var =
            (values.col(j).array() - local.mean[j]).square().sum() / values.rows();
        const double sd = std::sqrt(var);
        local.scale[j] = sd > 0.0 ? sd : 1.0;
    }
    Matrix standardized = values;
    standardized.rowwise() -= local.mean.transpose();
    standardized.array().rowwise() /= local.scale.transpose().array();
    local.knn.k = k;
    local.knn.positive_class = positive_class;
    local.knn.training_points = std::move(standardized);
    local.knn.training_labels = shard.labels;
    local.knn.finalize();
    return local;
}

ModelFn local_model_fn(const LocalModel& local) {
    return [&local](const Matrix& rows) {
        Matrix standardized = rows;
        standardized.rowwise() -= local.mean.transpose();
        standardized.array().rowwise() /= local.scale.transpose().array();
        return local.knn.predict_proba(standardized);
    };
}

double sample_std(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

double mean_of(const std::vector<double>& xs) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

}  // namespace

std::map<std::string, ManifestEntry> load_manifest(const std::string& path) {
    if (path.empty()) throw ConfigError("no dataset manifest given");
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw ConfigError("malformed manifest " + path + ": " + e.what());
    }
    if (doc.value("kind", std::string{}) != "dataset_manifest")
        throw ConfigError(path + " is not a dataset manifest");
    const fs::path base = fs::path(path).parent_path();

    std::map<std::string, ManifestEntry> out;
    for (const auto& [name, entry] : doc.at("datasets").items()) {
        ManifestEntry e;
        fs::path p = entry.at("path").get<std::string>();
        if (p.is_relative()) p = base / p;
        e.path = p.string();
        e.label_column = entry.at("label_column").get<std::string>();
        out[name] = std::move(e);
    }
    return out;
}

ExperimentConfig config_from_json_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const DataError& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError("malformed config " + path + ": " + e.what());
    }

    ExperimentConfig config;
    try {
        config.dataset = doc.value("dataset", std::string{});
        config.manifest_path = doc.value("manifest", std::string{});
        if (doc.contains("seeds"))
            config.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
        config.n_explain = doc.value("n_explain", Index{0});
        config.test_fraction = doc.value("test_fraction", 1.0 / 3.0);
        config.output_dir = doc.value("output_dir", std::string{"."});

        if (doc.contains("partition")) {
            const json& p = doc.at("partition");
            PartitionSpec spec;
            const std::string mode = p.value("mode", std::string{"horizontal"});
            if (mode == "horizontal") spec.mode = PartitionMode::kHorizontal;
            else if (mode == "vertical") spec.mode = PartitionMode::kVertical;
            else throw ConfigError("unknown partition mode: " + mode);
            spec.party_count = p.value("parties", 2);
            if (p.contains("bias")) spec.bias = p.at("bias").get<double>();
            if (p.contains("feature_split")) {
                for (const auto& range : p.at("feature_split")) {
                    if (!range.is_array() || range.size() != 2)
                        throw ConfigError("feature_split entries must be [first, last] pairs");
                    spec.feature_split.emplace_back(range[0].get<int>(),
                                                    range[1].get<int>());
                }
            }
            config.partition = std::move(spec);
        }

        if (doc.contains("dc")) {
            const json& d = doc.at("dc");
            config.dc.local_dim = d.value("local_dim", Index{-1});
            config.dc.unified_dim = d.value("unified_dim", Index{-1});
            config.dc.anchor_count = d.value("anchor_count", Index{2000});
            config.dc.k = d.value("k", 7);
            config.dc.positive_class = d.value("positive_class", 1);
            config.dc.standardize = d.value("standardize", true);
            const std::string stat = d.value("reference_stat", std::string{"median"});
            if (stat == "median") config.dc.reference_stat = AggregateStat::kMedian;
            else if (stat == "mean") config.dc.reference_stat = AggregateStat::kMean;
            else throw ConfigError("unknown reference_stat: " + stat);
        }
    } catch (const json::exception& e) {
        throw ConfigError("bad config field in " + path + ": " + e.what());
    }
    if (config.seeds.empty()) throw ConfigError("the seed list is empty");
    return config;
}

ConsistencyReport run_horizontal_consistency(const ExperimentConfig& config) {
    static const std::set<std::string> kKnown = {"iris", "pima", "adult", "wine", "heart"};
    if (kKnown.find(config.dataset) == kKnown.end())
        throw ConfigError("unknown dataset for the agreement study: " + config.dataset);
    PartitionSpec part;
    if (config.partition) part = *config.partition;
    if (part.mode != PartitionMode::kHorizontal || part.party_count != 2 || part.bias ||
        !part.feature_split.empty())
        throw ConfigError("the agreement study needs a plain two-party horizontal split");
    if (config.seeds.empty()) throw ConfigError("the seed list is empty");
    const Index n_explain = config.n_explain > 0 ? config.n_explain : 50;

    const LabeledDataset full = load_dataset(config);
    const Index m = full.features.cols();

    ConsistencyReport report;
    report.dataset = config.dataset;
    report.n_features = m;
    report.seeds = config.seeds;
    report.feature_names = full.features.feature_names;
    report.kernel_rmse_per_feature = Vector::Zero(m);
    report.dc_rmse_per_feature = Vector::Zero(m);

    for (const std::uint64_t seed : config.seeds) {
        const auto [train, test] = split_train_test(full, config.test_fraction, seed);
        const auto shards = partition(train, part, seed);

        std::vector<std::vector<FeatureRange>> ranges;
        for (const auto& shard : shards)
            ranges.push_back(feature_ranges(shard.features.values));
        const AnchorSet anchor = generate_anchor(pool_ranges(ranges), config.dc.anchor_count,
                                                 seed, full.features.feature_names);
        const HorizontalCollab collab =
            train_collab_horizontal(shards, anchor, to_dc_config(config.dc));

        std::vector<LocalModel> locals;
        std::vector<ReferenceValue> own_refs;
        for (const auto& shard : shards) {
            locals.push_back(
                make_local_model(shard, config.dc.k, config.dc.positive_class));
            own_refs.push_back(
                party_data_reference(shard.features, config.dc.reference_stat));
        }

        const Index count = std::min<Index>(n_explain, test.rows());
        if (count == 0) throw DataError("no test rows left to explain");
        Matrix own_phi[2] = {Matrix(count, m), Matrix(count, m)};
        Matrix dc_phi[2] = {Matrix(count, m), Matrix(count, m)};
        for (Index i = 0; i < count; ++i) {
            const Vector x = test.features.values.row(i);
            for (int u = 0; u < 2; ++u) {
                ExplanationRequest request;
                request.x = x;
                request.r = own_refs[u].r;
                request.feature_names = full.features.feature_names;
                request.model = local_model_fn(locals[u]);
                own_phi[u].row(i) = explain(request).phi;
                dc_phi[u].row(i) =
                    explain_horizontal(collab.parties[u], collab.model, x, anchor,
                                       config.dc.reference_stat)
                        .phi;
            }
        }

        const Vector kernel_rmse = compare_attributions_rmse(own_phi[0], own_phi[1]);
        const Vector dc_rmse = compare_attributions_rmse(dc_phi[0], dc_phi[1]);
        report.kernel_rmse_per_feature += kernel_rmse;
        report.dc_rmse_per_feature += dc_rmse;
        report.per_seed_kernel_rmse.push_back(kernel_rmse.mean());
        report.per_seed_dc_rmse.push_back(dc_rmse.mean());

        // Accuracy is evaluated through the first party's view of the shared
        // space; the alignment makes the choice of party immaterial.
        const Matrix unified_test = to_unified(collab.parties[0], test.features.values);
        report.per_seed_accuracy.push_back(
            collab.model.accuracy(unified_test, test.labels));
    }

    const double n_seeds = static_cast<double>(config.seeds.size());
    report.kernel_rmse_per_feature /= n_seeds;
    report.dc_rmse_per_feature /= n_seeds;
    report.kernel_rmse_mean = mean_of(report.per_seed_kernel_rmse);
    report.kernel_rmse_std = sample_std(report.per_seed_kernel_rmse, report.kernel_rmse_mean);
    report.dc_rmse_mean = mean_of(report.per_seed_dc_rmse);
    report.dc_rmse_std = sample_std(report.per_seed_dc_rmse, report.dc_rmse_mean);
    report.dc_accuracy = mean_of(report.per_seed_accuracy);
    report.artifacts = emit_report(report, config.output_dir);
    return report;
}

ContradictionReport run_contradiction_demo(const ExperimentConfig& config) {
    if (config.dataset != "adult")
        throw ConfigError("the contradiction demo is defined on the adult data");
    PartitionSpec part;
    part.bias = 0.9;
    if (config.partition) part = *config.partition;
    if (part.mode != PartitionMode::kHorizontal || part.party_count != 2 ||
        !part.bias.has_value() || *part.bias != 0.9 || !part.feature_split.empty())
        throw ConfigError("the demo needs the biased two-party split (bias 0.9)");
    const Index n_explain = config.n_explain > 0 ? config.n_explain : 100;
    const std::uint64_t seed = single_seed(config);

    const LabeledDataset full = load_dataset(config);
    const Index m = full.features.cols();
    const auto [train, test] = split_train_test(full, config.test_fraction, seed);
    (void)test;
    if (train.rows() <= n_explain + 2 * config.dc.k)
        throw DataError("training set too small for the demo");

    // The shuffled training rows double as the seeded validation draw: the
    // first n_explain rows are set aside before the biased split.
    std::vector<std::size_t> head(static_cast<size_t>(n_explain));
    for (size_t i = 0; i < head.size(); ++i) head[i] = i;
    std::vector<std::size_t> tail(static_cast<size_t>(train.rows() - n_explain));
    for (size_t i = 0; i < tail.size(); ++i) tail[i] = i + head.size();
    const LabeledDataset validation = take_rows(train, head);
    const LabeledDataset pool = take_rows(train, tail);

    const auto shards = partition(pool, part, seed);
    std::vector<std::vector<FeatureRange>> ranges;
    for (const auto& shard : shards) ranges.push_back(feature_ranges(shard.features.values));
    const AnchorSet anchor = generate_anchor(pool_ranges(ranges), config.dc.anchor_count,
                                             seed, full.features.feature_names);
    const HorizontalCollab collab =
        train_collab_horizontal(shards, anchor, to_dc_config(config.dc));

    std::vector<LocalModel> locals;
    std::vector<ReferenceValue> own_refs;
    for (const auto& shard : shards) {
        locals.push_back(make_local_model(shard, config.dc.k, config.dc.positive_class));
        own_refs.push_back(party_data_reference(shard.features, config.dc.reference_stat));
    }

    ContradictionReport report;
    report.seed = seed;
    report.feature_names = full.features.feature_names;
    report.own_per_feature.assign(static_cast<size_t>(m), 0);
    report.dc_per_feature.assign(static_cast<size_t>(m), 0);
    report.samples = validation.rows();
    for (const auto& shard : shards) {
        report.party_sizes.push_back(shard.rows());
        long long positives = 0;
        for (int label : shard.labels)
            if (label == config.dc.positive_class) ++positives;
        report.party_positive_rates.push_back(static_cast<double>(positives) /
                                              static_cast<double>(shard.rows()));
    }

    Matrix own_phi[2] = {Matrix(validation.rows(), m), Matrix(validation.rows(), m)};
    Matrix dc_phi[2] = {Matrix(validation.rows(), m), Matrix(validation.rows(), m)};
    for (Index i = 0; i < validation.rows(); ++i) {
        const Vector x = validation.features.values.row(i);
        for (int u = 0; u < 2; ++u) {
            ExplanationRequest request;
            request.x = x;
            request.r = own_refs[u].r;
            request.feature_names = report.feature_names;
            request.model = local_model_fn(locals[u]);
            own_phi[u].row(i) = explain(request).phi;
            dc_phi[u].row(i) = explain_horizontal(collab.parties[u], collab.model, x,
                                                  anchor, config.dc.reference_stat)
                                   .phi;
        }
    }

    std::vector<long long> per_sample_own(static_cast<size_t>(validation.rows()), 0);
    for (Index i = 0; i < validation.rows(); ++i) {
        for (Index j = 0; j < m; ++j) {
            if (own_phi[0](i, j) * own_phi[1](i, j) < 0.0) {
                ++report.own_per_feature[static_cast<size_t>(j)];
                ++per_sample_own[static_cast<size_t>(i)];
            }
            if (dc_phi[0](i, j) * dc_phi[1](i, j) < 0.0)
                ++report.dc_per_feature[static_cast<size_t>(j)];
        }
    }
    for (long long c : report.own_per_feature) report.own_total += c;
    for (long long c : report.dc_per_feature) report.dc_total += c;

    std::vector<Index> order(static_cast<size_t>(validation.rows()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Index>(i);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return per_sample_own[static_cast<size_t>(a)] > per_sample_own[static_cast<size_t>(b)];
    });
    for (Index rank = 0; rank < std::min<Index>(2, validation.rows()); ++rank) {
        const Index i = order[static_cast<size_t>(rank)];
        ContradictionReport::SampleDetail detail;
        detail.sample = i;
        detail.own = Matrix(m, 2);
        detail.dc = Matrix(m, 2);
        for (int u = 0; u < 2; ++u) {
            detail.own.col(u) = own_phi[u].row(i).transpose();
            detail.dc.col(u) = dc_phi[u].row(i).transpose();
        }
        report.top_samples.push_back(std::move(detail));
    }

    report.artifacts = emit_report(report, config.output_dir);
    return report;
}

VerticalReport run_vertical_consistency(const ExperimentConfig& config) {
    if (config.dataset != "adult")
        throw ConfigError("the vertical study is defined on the adult data");
    PartitionSpec part;
    part.mode = PartitionMode::kVertical;
    part.feature_split = {{0, 5}, {6, 11}};
    if (config.partition) part = *config.partition;
    if (part.mode != PartitionMode::kVertical || part.party_count != 2 ||
        part.feature_split.size() != 2 || part.bias)
        throw ConfigError("the vertical study needs a two-party column split");
    const Index n_explain = config.n_explain > 0 ? config.n_explain : 100;
    const std::uint64_t seed = single_seed(config);

    const LabeledDataset full = load_dataset(config);
    const auto [train, test] = split_train_test(full, config.test_fraction, seed);
    const auto shards = partition(train, part, seed);

    std::vector<DataMatrix> blocks;
    for (const auto& shard : shards) blocks.push_back(shard.features);

    VerticalReport report;
    report.seed = seed;
    const VerticalCollab collab = train_collab_vertical(
        blocks, shards[0].labels, 0, to_dc_config(config.dc), &report.log);
    report.feature_names = collab.feature_names;
    report.host_feature_count = collab.raw_offsets[1];

    const Index m = collab.raw_width();
    for (Index j = 0; j < m; ++j)
        report.owner.push_back(static_cast<int>(collab.owner_of(j)));

    // Each party aggregates its own raw block; the concatenation is the
    // agreed all-features reference.
    Vector r(m);
    for (size_t p = 0; p < blocks.size(); ++p) {
        const Vector med = party_data_reference(blocks[p], config.dc.reference_stat).r;
        r.segment(collab.raw_offsets[p], med.size()) = med;
    }
    const ReferenceValue reference{r, ReferenceOrigin::kPartyData};

    const Index count = std::min<Index>(n_explain, test.rows());
    if (count == 0) throw DataError("no test rows left to explain");
    const Index host_m = report.host_feature_count;
    const Index guest_m = m - host_m;

    report.full_phi = Matrix(count, m);
    report.partial_phi = Matrix(count, m);
    report.dc_feature_phi = Vector(count);
    report.guest_sum_phi = Vector(count);

    for (Index i = 0; i < count; ++i) {
        const Vector x = test.features.values.row(i);
        const Attribution att_full = explain_vertical_full(collab, x, reference, &report.log);

        const VerticalExplainContext host_ctx =
            build_partial_context(collab, 0, x, r, "host-partial", &report.log);
        const Attribution att_host = explain_vertical_partial(
            host_ctx, collab.model, x.head(host_m), r.head(host_m));

        const VerticalExplainContext guest_ctx =
            build_partial_context(collab, 1, x, r, "guest-partial", &report.log);
        const Attribution att_guest = explain_vertical_partial(
            guest_ctx, collab.model, x.tail(guest_m), r.tail(guest_m));

        report.full_phi.row(i) = att_full.phi;
        report.partial_phi.row(i).head(host_m) = att_host.phi.head(host_m);
        report.partial_phi.row(i).tail(guest_m) = att_guest.phi.head(guest_m);
        report.dc_feature_phi[i] = att_host.phi[host_m];
        report.guest_sum_phi[i] = att_full.phi.tail(guest_m).sum();

        if (i == 0) {
            report.sample_full = att_full;
            report.sample_host = att_host;
            report.sample_guest = att_guest;
        }
    }

    report.correlation = Vector(m);
    for (Index j = 0; j < m; ++j)
        report.correlation[j] =
            pearson_correlation(report.full_phi.col(j), report.partial_phi.col(j));
    report.dc_feature_discrepancy =
        (report.dc_feature_phi - report.guest_sum_phi).cwiseAbs().mean();
    report.dc_feature_correlation =
        pearson_correlation(report.dc_feature_phi, report.guest_sum_phi);

    report.artifacts = emit_report(report, config.output_dir);
    return report;
}

std::vector<std::string> emit_report(const ConsistencyReport& report,
                                     const std::string& dir) {
    const std::string base = "horizontal_consistency_" + report.dataset + "_seeds" +
                             std::to_string(report.seeds.front()) + "-" +
                             std::to_string(report.seeds.back());
    std::vector<std::string> written;

    std::ostringstream csv;
    csv << "dataset,n_features,dc_accuracy,kernelshap_rmse_mean,kernelshap_rmse_std,"
           "dcshap_rmse_mean,dcshap_rmse_std\n";
    csv << report.dataset << ',' << report.n_features << ',' << fixed6(report.dc_accuracy)
        << ',' << fixed6(report.kernel_rmse_mean) << ','
        << (report.seeds.size() >= 2 ? fixed6(report.kernel_rmse_std) : std::string{})
        << ',' << fixed6(report.dc_rmse_mean) << ','
        << (report.seeds.size() >= 2 ? fixed6(report.dc_rmse_std) : std::string{}) << '\n';
    write_artifact(dir, base + ".csv", csv.str(), written);

    json doc;
    doc["format_version"] = 1;
    doc["kind"] = "consistency_report";
    doc["dataset"] = report.dataset;
    doc["seeds"] = report.seeds;
    doc["n_features"] = report.n_features;
    doc["feature_names"] = report.feature_names;
    doc["per_seed"] = {{"kernelshap_rmse", report.per_seed_kernel_rmse},
                       {"dcshap_rmse", report.per_seed_dc_rmse},
                       {"dc_accuracy", report.per_seed_accuracy}};
    doc["per_feature"] = {{"kernelshap_rmse", vector_to_json(report.kernel_rmse_per_feature)},
                          {"dcshap_rmse", vector_to_json(report.dc_rmse_per_feature)}};
    doc["aggregate"] = {{"dc_accuracy", report.dc_accuracy},
                        {"kernelshap_rmse_mean", report.kernel_rmse_mean},
                        {"kernelshap_rmse_std", report.kernel_rmse_std},
                        {"dcshap_rmse_mean", report.dc_rmse_mean},
                        {"dcshap_rmse_std", report.dc_rmse_std}};
    write_artifact(dir, base + ".json", doc.dump(2) + "\n", written);

    Matrix bars(report.n_features, 2);
    bars.col(0) = report.kernel_rmse_per_feature;
    bars.col(1) = report.dc_rmse_per_feature;
    write_artifact(dir, base + "_rmse.svg",
                   svg_grouped_bars(report.feature_names, {"KernelSHAP", "DC-SHAP"}, bars,
                                    "Between-user attribution RMSE: " + report.dataset),
                   written);
    return written;
}

std::vector<std::string> emit_report(const ContradictionReport& report,
                                     const std::string& dir) {
    const std::string base = "demo_contradiction_adult_seed" + std::to_string(report.seed);
    std::vector<std::string> written;

    std::ostringstream csv;
    csv << "feature,own_baseline_contradictions,dcshap_contradictions\n";
    for (size_t j = 0; j < report.feature_names.size(); ++j)
        csv << report.feature_names[j] << ',' << report.own_per_feature[j] << ','
            << report.dc_per_feature[j] << '\n';
    write_artifact(dir, base + ".csv", csv.str(), written);

    json doc;
    doc["format_version"] = 1;
    doc["kind"] = "contradiction_report";
    doc["seed"] = report.seed;
    doc["samples"] = report.samples;
    doc["feature_names"] = report.feature_names;
    doc["own_baseline"] = {{"total", report.own_total},
                           {"per_feature", report.own_per_feature}};
    doc["dcshap"] = {{"total", report.dc_total}, {"per_feature", report.dc_per_feature}};
    doc["party_sizes"] = report.party_sizes;
    doc["party_positive_rates"] = report.party_positive_rates;
    json tops = json::array();
    for (const auto& detail : report.top_samples) tops.push_back(detail.sample);
    doc["top_samples"] = std::move(tops);
    write_artifact(dir, base + ".json", doc.dump(2) + "\n", written);

    for (const auto& detail : report.top_samples) {
        const std::string tag = base + "_sample" + std::to_string(detail.sample);
        write_artifact(dir, tag + "_own.svg",
                       svg_grouped_bars(report.feature_names, {"User 1", "User 2"},
                                        detail.own,
                                        "Own-baseline attributions, sample " +
                                            std::to_string(detail.sample)),
                       written);
        write_artifact(dir, tag + "_dcshap.svg",
                       svg_grouped_bars(report.feature_names, {"User 1", "User 2"},
                                        detail.dc,
                                        "Shared-baseline attributions, sample " +
                                            std::to_string(detail.sample)),
                       written);
    }
    return written;
}

std::vector<std::string> emit_report(const VerticalReport& report, const std::string& dir) {
    const std::string base = "vertical_consistency_adult_seed" + std::to_string(report.seed);
    std::vector<std::string> written;

    std::ostringstream csv;
    csv << "feature,owner_party,full_vs_partial_correlation\n";
    for (size_t j = 0; j < report.feature_names.size(); ++j)
        csv << report.feature_names[j] << ',' << report.owner[j] << ','
            << fixed6(report.correlation[static_cast<Index>(j)]) << '\n';
    write_artifact(dir, base + ".csv", csv.str(), written);

    json doc;
    doc["format_version"] = 1;
    doc["kind"] = "vertical_report";
    doc["seed"] = report.seed;
    doc["samples"] = report.full_phi.rows();
    doc["feature_names"] = report.feature_names;
    doc["owner_party"] = report.owner;
    doc["full_vs_partial_correlation"] = vector_to_json(report.correlation);
    doc["dc_features"] = {{"mean_abs_discrepancy_vs_guest_sum", report.dc_feature_discrepancy},
                          {"correlation_vs_guest_sum", report.dc_feature_correlation}};
    write_artifact(dir, base + ".json", doc.dump(2) + "\n", written);
    write_artifact(dir, base + "_messages.json", to_json(report.log), written);

    for (size_t j = 0; j < report.feature_names.size(); ++j) {
        const Index col = static_cast<Index>(j);
        write_artifact(dir, base + "_scatter_" + safe_name(report.feature_names[j]) + ".svg",
                       svg_scatter(report.full_phi.col(col), report.partial_phi.col(col),
                                   "all-features attribution", "partial attribution",
                                   report.feature_names[j]),
                       written);
    }
    write_artifact(dir, base + "_force_full_sample0.svg",
                   svg_force_plot(report.sample_full, "All features, first sample"),
                   written);
    write_artifact(dir, base + "_force_host_sample0.svg",
                   svg_force_plot(report.sample_host, "Host view, first sample"), written);
    write_artifact(dir, base + "_force_guest_sample0.svg",
                   svg_force_plot(report.sample_guest, "Guest view, first sample"), written);
    return written;
}

}  // namespace dcshap
