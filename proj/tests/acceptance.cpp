// Acceptance harness: runs the full desk-scale study and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dcshap/csv.hpp"
#include "dcshap/datagen.hpp"
#include "dcshap/dataset.hpp"
#include "dcshap/dc.hpp"
#include "dcshap/dcshap.hpp"
#include "dcshap/error.hpp"
#include "dcshap/experiments.hpp"
#include "dcshap/kernelshap.hpp"
#include "dcshap/rng.hpp"
#include "dcshap/serialize.hpp"
#include "support/shapley_oracle.hpp"
#include "support/test_util.hpp"

using namespace dcshap;
namespace fs = std::filesystem;

namespace {

struct CriterionResult {
    bool ran = false;
    bool pass = false;
    std::string detail;
};

std::array<CriterionResult, 9> g_results;  // 1-based

void set_result(int id, bool pass, const std::string& detail) {
    g_results[static_cast<std::size_t>(id)] = {true, pass, detail};
}

void note(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    std::vprintf(fmt, args);
    va_end(args);
    std::printf("\n");
    std::fflush(stdout);
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// criterion 1: explain() against the factorial-formula oracle

void check_oracle_equivalence() {
    Rng rng(20240814);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Index m = 1 + static_cast<Index>(i % 8);
        ExplanationRequest request;
        request.x = testing::random_vector(rng, m);
        request.r = testing::random_vector(rng, m);
        request.model = (i % 2 == 0) ? testing::random_model(rng, m)
                                     : testing::random_knn_model(rng, m);
        const Attribution att = explain(request);
        const testing::OracleResult oracle =
            testing::brute_force_shapley(request.model, request.x, request.r);
        worst = std::max(worst, (att.phi - oracle.phi).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(att.base - oracle.base));
        worst = std::max(worst, std::abs(att.predicted - oracle.predicted));
    }
    set_result(1, worst <= 1e-6,
               "max |explain - oracle| = " + fmt_double(worst) + " over 200 instances");
}

// ---------------------------------------------------------------------------
// criterion 3: closed-form kernel weights

void check_kernel_weights() {
    bool pass = shapley_kernel_weight(4, 1) == 0.25 && shapley_kernel_weight(4, 2) == 0.125;
    double worst_asym = 0.0;
    for (Index m = 2; m <= 12; ++m)
        for (Index s = 1; s < m; ++s)
            worst_asym = std::max(worst_asym,
                                  std::abs(shapley_kernel_weight(m, s) -
                                           shapley_kernel_weight(m, m - s)));
    pass = pass && worst_asym <= 1e-15;
    set_result(3, pass,
               "w(4,1) = " + fmt_double(shapley_kernel_weight(4, 1)) + ", w(4,2) = " +
                   fmt_double(shapley_kernel_weight(4, 2)) +
                   ", worst symmetry gap = " + fmt_double(worst_asym));
}

// ---------------------------------------------------------------------------
// criterion 7 (toy part): vertical protocols against coalition-game oracles

struct ToyVertical {
    VerticalCollab collab;
    Vector x;
    Vector r;
};

ToyVertical make_toy(std::uint64_t seed, Index left_width, Index right_width) {
    Rng rng(seed);
    const Index rows = 60;
    DataMatrix left, right;
    left.values = testing::random_matrix(rng, rows, left_width);
    right.values = testing::random_matrix(rng, rows, right_width);
    for (Index j = 0; j < left_width; ++j) left.feature_names.push_back("a" + std::to_string(j));
    for (Index j = 0; j < right_width; ++j)
        right.feature_names.push_back("b" + std::to_string(j));
    std::vector<int> labels(static_cast<std::size_t>(rows));
    for (Index i = 0; i < rows; ++i)
        labels[static_cast<std::size_t>(i)] =
            left.values(i, 0) + right.values(i, right_width - 1) > 0 ? 1 : 0;

    DcConfig config;
    config.local_dim = std::min(left_width, right_width);
    config.k = 5;

    ToyVertical toy;
    toy.collab = train_collab_vertical({left, right}, labels, 0, config);
    toy.x = testing::random_vector(rng, left_width + right_width);
    toy.r = Vector(left_width + right_width);
    toy.r.head(left_width) = column_medians(left.values);
    toy.r.tail(right_width) = column_medians(right.values);
    return toy;
}

double toy_full_error(const ToyVertical& toy) {
    const Attribution att =
        explain_vertical_full(toy.collab, toy.x, {toy.r, ReferenceOrigin::kSupplied});
    const auto& collab = toy.collab;
    ModelFn game = [&collab](const Matrix& rows) {
        return collab.model.predict_proba(collab.transform_blocks(rows));
    };
    const testing::OracleResult oracle = testing::brute_force_shapley(game, toy.x, toy.r);
    return (att.phi - oracle.phi).cwiseAbs().maxCoeff();
}

double toy_partial_error(const ToyVertical& toy, Index host) {
    const VerticalExplainContext ctx =
        build_partial_context(toy.collab, host, toy.x, toy.r,
                              host == 0 ? "host-partial" : "guest-partial");
    const Vector x_host = toy.x.segment(ctx.host_begin, ctx.host_width);
    const Vector r_host = toy.r.segment(ctx.host_begin, ctx.host_width);
    const Attribution att =
        explain_vertical_partial(ctx, toy.collab.model, x_host, r_host);

    const auto& model = toy.collab.model;
    ModelFn game = [&ctx, &model](const Matrix& rows) {
        Matrix unified(rows.rows(), model.unified_dim());
        for (Index i = 0; i < rows.rows(); ++i) {
            const Vector host_raw = rows.row(i).head(ctx.host_width);
            unified.row(i).segment(ctx.host_rep_offset,
                                   ctx.host_transform.projection.cols()) =
                apply_transform(ctx.host_transform, host_raw).transpose();
            const Vector& guest = rows(i, ctx.host_width) != 0.0 ? ctx.guest_rep_of_x
                                                                 : ctx.guest_rep_of_r;
            unified.row(i).segment(ctx.guest_rep_offset, guest.size()) = guest.transpose();
        }
        return model.predict_proba(unified);
    };
    Vector x_game(ctx.host_width + 1), r_game(ctx.host_width + 1);
    x_game.head(ctx.host_width) = x_host;
    r_game.head(ctx.host_width) = r_host;
    x_game[ctx.host_width] = 1.0;
    r_game[ctx.host_width] = 0.0;
    const testing::OracleResult oracle = testing::brute_force_shapley(game, x_game, r_game);
    return (att.phi - oracle.phi).cwiseAbs().maxCoeff();
}

double toy_dummy_error(const ToyVertical& toy) {
    double worst = explain_vertical_full(toy.collab, toy.r,
                                         {toy.r, ReferenceOrigin::kSupplied})
                       .phi.cwiseAbs()
                       .maxCoeff();
    for (Index host = 0; host < 2; ++host) {
        const VerticalExplainContext ctx = build_partial_context(
            toy.collab, host, toy.r, toy.r, host == 0 ? "host-partial" : "guest-partial");
        const Vector r_host = toy.r.segment(ctx.host_begin, ctx.host_width);
        const Attribution att =
            explain_vertical_partial(ctx, toy.collab.model, r_host, r_host);
        worst = std::max(worst, att.phi.cwiseAbs().maxCoeff());
    }
    return worst;
}

struct ToyOutcome {
    bool ran = false;
    double oracle_error = 0.0;
    double dummy_error = 0.0;
};

ToyOutcome check_vertical_toys() {
    ToyOutcome outcome;
    outcome.ran = true;
    int seed = 900;
    for (const auto& widths : std::vector<std::pair<Index, Index>>{{1, 1}, {2, 2}, {1, 3}}) {
        const ToyVertical toy = make_toy(static_cast<std::uint64_t>(seed++),
                                         widths.first, widths.second);
        outcome.oracle_error = std::max(outcome.oracle_error, toy_full_error(toy));
        outcome.oracle_error = std::max(outcome.oracle_error, toy_partial_error(toy, 0));
        outcome.oracle_error = std::max(outcome.oracle_error, toy_partial_error(toy, 1));
        outcome.dummy_error = std::max(outcome.dummy_error, toy_dummy_error(toy));
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// criterion 8: rerunning a driver with the same config rewrites the same bytes

bool same_artifacts(const std::string& dir_a, const std::string& dir_b,
                    const std::vector<std::string>& names, std::string& mismatch) {
    for (const auto& name : names) {
        if (read_text_file(dir_a + "/" + name) != read_text_file(dir_b + "/" + name)) {
            mismatch = name;
            return false;
        }
    }
    return true;
}

void check_determinism(const std::string& manifest) {
    ExperimentConfig horizontal;
    horizontal.dataset = "iris";
    horizontal.manifest_path = manifest;
    horizontal.seeds = {0, 1};
    horizontal.n_explain = 5;
    horizontal.dc.anchor_count = 500;

    ExperimentConfig demo;
    demo.dataset = "adult";
    demo.manifest_path = manifest;
    demo.seeds = {0};
    demo.n_explain = 5;

    ExperimentConfig vertical = demo;
    vertical.n_explain = 3;

    bool pass = true;
    std::string detail;

    {
        horizontal.output_dir = testing::scratch_dir("det_h_a");
        const auto first = run_horizontal_consistency(horizontal).artifacts;
        horizontal.output_dir = testing::scratch_dir("det_h_b");
        const auto second = run_horizontal_consistency(horizontal).artifacts;
        std::string bad;
        if (first != second ||
            !same_artifacts("scratch/det_h_a", "scratch/det_h_b", first, bad)) {
            pass = false;
            detail = "agreement study differs (" + bad + ")";
        }
    }
    note("  determinism: agreement study %s", pass ? "stable" : "UNSTABLE");

    if (pass) {
        demo.output_dir = testing::scratch_dir("det_d_a");
        const auto first = run_contradiction_demo(demo).artifacts;
        demo.output_dir = testing::scratch_dir("det_d_b");
        const auto second = run_contradiction_demo(demo).artifacts;
        std::string bad;
        if (first != second ||
            !same_artifacts("scratch/det_d_a", "scratch/det_d_b", first, bad)) {
            pass = false;
            detail = "contradiction demo differs (" + bad + ")";
        }
        note("  determinism: contradiction demo %s", pass ? "stable" : "UNSTABLE");
    }

    if (pass) {
        vertical.output_dir = testing::scratch_dir("det_v_a");
        const auto first = run_vertical_consistency(vertical).artifacts;
        vertical.output_dir = testing::scratch_dir("det_v_b");
        const auto second = run_vertical_consistency(vertical).artifacts;
        std::string bad;
        if (first != second ||
            !same_artifacts("scratch/det_v_a", "scratch/det_v_b", first, bad)) {
            pass = false;
            detail = "vertical study differs (" + bad + ")";
        }
        note("  determinism: vertical study %s", pass ? "stable" : "UNSTABLE");
    }

    if (pass) detail = "three drivers rerun byte-identically";
    set_result(8, pass, detail);
}

// ---------------------------------------------------------------------------
// criteria 4 and 5: the ten-seed agreement table

void check_agreement_table(const std::string& manifest) {
    struct Expectation {
        const char* dataset;
        double accuracy;
    };
    const std::vector<Expectation> expectations = {
        {"iris", 0.95}, {"pima", 0.73}, {"adult", 0.83}, {"wine", 0.94}, {"heart", 0.80}};

    bool dc_below_kernel = true;
    int factor_hits = 0;
    bool magnitudes = true;
    bool accuracies = true;
    std::string table;

    for (const auto& expected : expectations) {
        ExperimentConfig config;
        config.dataset = expected.dataset;
        config.manifest_path = manifest;
        config.seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        config.output_dir = "scratch/acceptance_table";
        const ConsistencyReport report = run_horizontal_consistency(config);

        const double factor = report.kernel_rmse_mean / report.dc_rmse_mean;
        dc_below_kernel = dc_below_kernel && report.dc_rmse_mean < report.kernel_rmse_mean;
        if (factor >= 1.75) ++factor_hits;
        if (std::string(expected.dataset) == "iris" && report.dc_rmse_mean > 0.15)
            magnitudes = false;
        if (std::string(expected.dataset) == "pima" && report.dc_rmse_mean > 0.03)
            magnitudes = false;
        if (std::abs(report.dc_accuracy - expected.accuracy) > 0.07) accuracies = false;

        note("  %s: accuracy %.3f, own-model RMSE %.4f, shared-model RMSE %.4f (x%.2f)",
             expected.dataset, report.dc_accuracy, report.kernel_rmse_mean,
             report.dc_rmse_mean, factor);
        table += std::string(expected.dataset) + " x" + fmt_double(factor) + " ";
    }

    set_result(4, dc_below_kernel && factor_hits >= 4,
               "shared model narrows between-user RMSE on 5/5 datasets; factor >= 1.75 on " +
                   std::to_string(factor_hits) + "/5 (" + table + ")");
    set_result(5, magnitudes && accuracies,
               magnitudes && accuracies
                   ? "iris/pima magnitudes and all five accuracies inside the windows"
                   : std::string("outside the windows: ") +
                         (magnitudes ? "" : "rmse magnitude ") +
                         (accuracies ? "" : "accuracy"));
}

// ---------------------------------------------------------------------------
// criterion 6: the biased-split contradiction demo

void check_contradiction_demo(const std::string& manifest) {
    ExperimentConfig config;
    config.dataset = "adult";
    config.manifest_path = manifest;
    config.seeds = {0};
    config.output_dir = "scratch/acceptance_demo";
    const ContradictionReport report = run_contradiction_demo(config);
    note("  demo: %lld own-baseline vs %lld shared-model sign contradictions",
         report.own_total, report.dc_total);
    set_result(6, report.dc_total < report.own_total,
               "opposite-sign pairs " + std::to_string(report.dc_total) +
                   " (shared) vs " + std::to_string(report.own_total) + " (own baselines)");
}

// ---------------------------------------------------------------------------
// criterion 7 (adult part): privacy audit + dummy slices on the census table

void check_vertical_adult(const std::string& manifest, const ToyOutcome& toys) {
    ExperimentConfig config;
    config.dataset = "adult";
    config.manifest_path = manifest;
    config.seeds = {0};
    config.output_dir = "scratch/acceptance_vertical";
    const VerticalReport report = run_vertical_consistency(config);

    const Index guest_raw = static_cast<Index>(report.feature_names.size()) -
                            report.host_feature_count;
    Index widest_guest_payload = 0;
    for (const auto& message : report.log.messages)
        if (message.sender == "guest" && message.receiver == "host")
            widest_guest_payload = std::max(widest_guest_payload, message.cols);
    const bool privacy = widest_guest_payload > 0 && widest_guest_payload < guest_raw;
    note("  vertical: mean correlation %.4f, widest guest payload %lld of %lld raw",
         report.correlation.mean(), static_cast<long long>(widest_guest_payload),
         static_cast<long long>(guest_raw));

    // Dummy slices on the same collaboration the driver trains.
    const auto manifest_map = load_manifest(manifest);
    LabeledDataset adult =
        load_csv(manifest_map.at("adult").path, manifest_map.at("adult").label_column);
    adult = preprocess_adult(adult);
    const auto [train, test] = split_train_test(adult, 1.0 / 3.0, 0);
    PartitionSpec spec;
    spec.mode = PartitionMode::kVertical;
    spec.feature_split = {{0, 5}, {6, 11}};
    const auto shards = partition(train, spec, 0);
    const VerticalCollab collab = train_collab_vertical(
        {shards[0].features, shards[1].features}, shards[0].labels, 0, DcConfig{});

    Vector r(collab.raw_width());
    r.head(6) = column_medians(shards[0].features.values);
    r.tail(6) = column_medians(shards[1].features.values);
    double dummy = explain_vertical_full(collab, r, {r, ReferenceOrigin::kSupplied})
                       .phi.cwiseAbs()
                       .maxCoeff();
    const VerticalExplainContext ctx =
        build_partial_context(collab, 0, r, r, "host-partial");
    dummy = std::max(dummy, explain_vertical_partial(ctx, collab.model, Vector(r.head(6)),
                                                     Vector(r.head(6)))
                                .phi.cwiseAbs()
                                .maxCoeff());
    note("  vertical: worst dummy attribution %s (toys %s)", fmt_double(dummy).c_str(),
         fmt_double(toys.dummy_error).c_str());

    const bool pass = toys.ran && toys.oracle_error <= 1e-6 && toys.dummy_error <= 1e-9 &&
                      privacy && dummy <= 1e-9;
    set_result(7, pass,
               "toy oracle error " + fmt_double(toys.oracle_error) + ", dummy error " +
                   fmt_double(std::max(dummy, toys.dummy_error)) +
                   ", guest payload width " + std::to_string(widest_guest_payload) +
                   " < " + std::to_string(guest_raw) + " raw columns");
}

// ---------------------------------------------------------------------------
// criterion 2: the process-wide local-accuracy ledger, checked last

void check_efficiency_ledger() {
    const long long count = EfficiencyAudit::count();
    const double worst = EfficiencyAudit::worst_gap();
    set_result(2, count >= 1000 && worst <= 1e-6,
               "base + sum(phi) = prediction within " + fmt_double(worst) + " across " +
                   std::to_string(count) + " explanations");
}

}  // namespace

int main() {
    const std::string data_dir = testing::scratch_dir("acceptance_data");
    const std::string manifest = data_dir + "/manifest.json";

    const auto phase = [](int first_id, int last_id, const char* name, auto&& fn) {
        note("== %s", name);
        try {
            fn();
        } catch (const std::exception& e) {
            for (int id = first_id; id <= last_id; ++id)
                set_result(id, false, std::string("threw: ") + e.what());
        }
    };

    ToyOutcome toys;
    phase(0, 0, "dataset generation",
          [&] { generate_datasets(data_dir); });
    phase(1, 1, "oracle equivalence", [] { check_oracle_equivalence(); });
    phase(3, 3, "kernel weight table", [] { check_kernel_weights(); });
    phase(7, 7, "vertical toy protocols", [&] { toys = check_vertical_toys(); });
    phase(8, 8, "rerun determinism", [&] { check_determinism(manifest); });
    phase(4, 5, "ten-seed agreement table", [&] { check_agreement_table(manifest); });
    phase(6, 6, "contradiction demo", [&] { check_contradiction_demo(manifest); });
    phase(7, 7, "vertical census study", [&] { check_vertical_adult(manifest, toys); });
    phase(2, 2, "local-accuracy ledger", [] { check_efficiency_ledger(); });

    static const char* kLabels[9] = {
        "",
        "oracle equivalence",
        "local accuracy",
        "kernel weights",
        "consistency advantage",
        "consistency magnitudes",
        "contradiction demo",
        "vertical protocols",
        "determinism",
    };

    bool all_pass = true;
    std::printf("\n");
    for (int id = 1; id <= 8; ++id) {
        const CriterionResult& result = g_results[static_cast<std::size_t>(id)];
        const bool ok = result.ran && result.pass;
        all_pass = all_pass && ok;
        std::printf("criterion %d [%s] %s: %s\n", id, ok ? "PASS" : "FAIL", kLabels[id],
                    result.ran ? result.detail.c_str() : "did not run");
    }
    return all_pass ? 0 : 1;
}
