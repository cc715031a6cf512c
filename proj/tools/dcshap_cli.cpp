#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "dcshap/datagen.hpp"
#include "dcshap/error.hpp"
#include "dcshap/experiments.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string manifest_override;
    std::string out_override;
    std::uint64_t seed_value = 0;
    CLI::Option* seed_option = nullptr;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    args.seed_option = cmd->add_option(
        "--seed", args.seed_value, "replace the config's seed list with this one seed");
    cmd->add_option("--out", args.out_override, "output directory override");
    cmd->add_option("--manifest", args.manifest_override, "dataset manifest override");
}

dcshap::ExperimentConfig resolve(const CommonArgs& args) {
    dcshap::ExperimentConfig config = dcshap::config_from_json_file(args.config_path);
    if (args.seed_option != nullptr && args.seed_option->count() > 0)
        config.seeds = {args.seed_value};
    if (!args.out_override.empty()) config.output_dir = args.out_override;
    if (!args.manifest_override.empty()) config.manifest_path = args.manifest_override;
    return config;
}

void print_artifacts(const std::vector<std::string>& artifacts, const std::string& dir) {
    std::printf("wrote %zu file(s) under %s\n", artifacts.size(), dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"data collaboration experiments: shared-model SHAP consistency"};
    app.require_subcommand(1);

    CommonArgs demo_args, horizontal_args, vertical_args;
    std::string gen_dir = "data";

    CLI::App* gen = app.add_subcommand("gen-data", "write the benchmark tables and manifest");
    gen->add_option("--out", gen_dir, "directory for the CSV files and manifest.json");

    CLI::App* demo = app.add_subcommand(
        "demo-contradiction",
        "biased two-party demo: opposite-sign attributions with and without sharing");
    add_common(demo, demo_args);

    CLI::App* horizontal = app.add_subcommand(
        "horizontal-consistency", "between-user attribution RMSE on a row-partitioned table");
    add_common(horizontal, horizontal_args);

    CLI::App* vertical = app.add_subcommand(
        "vertical-consistency", "full vs partial attributions on a column-partitioned table");
    add_common(vertical, vertical_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            const auto files = dcshap::generate_datasets(gen_dir);
            for (const auto& f : files)
                std::printf("%s -> %s (label: %s)\n", f.name.c_str(), f.file.c_str(),
                            f.label_column.c_str());
            std::printf("manifest.json written to %s\n", gen_dir.c_str());
        } else if (demo->parsed()) {
            const auto config = resolve(demo_args);
            const auto report = dcshap::run_contradiction_demo(config);
            std::printf("samples explained: %lld\n", static_cast<long long>(report.samples));
            std::printf("opposite-sign pairs, own baselines: %lld\n", report.own_total);
            std::printf("opposite-sign pairs, shared model:  %lld\n", report.dc_total);
            print_artifacts(report.artifacts, config.output_dir);
        } else if (horizontal->parsed()) {
            const auto config = resolve(horizontal_args);
            const auto report = dcshap::run_horizontal_consistency(config);
            std::printf("dataset: %s (%lld features, %zu seed(s))\n", report.dataset.c_str(),
                        static_cast<long long>(report.n_features), report.seeds.size());
            std::printf("collaboration accuracy: %.6f\n", report.dc_accuracy);
            std::printf("between-user RMSE, own models:   %.6f +/- %.6f\n",
                        report.kernel_rmse_mean, report.kernel_rmse_std);
            std::printf("between-user RMSE, shared model: %.6f +/- %.6f\n",
                        report.dc_rmse_mean, report.dc_rmse_std);
            print_artifacts(report.artifacts, config.output_dir);
        } else if (vertical->parsed()) {
            const auto config = resolve(vertical_args);
            const auto report = dcshap::run_vertical_consistency(config);
            std::printf("features: %zu (host holds %lld)\n", report.feature_names.size(),
                        static_cast<long long>(report.host_feature_count));
            std::printf("mean full-vs-partial correlation: %.6f\n",
                        report.correlation.mean());
            std::printf("aggregated-block attribution vs guest sum: corr %.6f, mean |diff| %.6f\n",
                        report.dc_feature_correlation, report.dc_feature_discrepancy);
            std::printf("messages logged: %zu\n", report.log.messages.size());
            print_artifacts(report.artifacts, config.output_dir);
        }
    } catch (const dcshap::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const dcshap::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 2;
    } catch (const dcshap::NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
