#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "dcshap/dc.hpp"
#include "dcshap/error.hpp"
#include "dcshap/rng.hpp"
#include "dcshap/serialize.hpp"
#include "dcshap/svg.hpp"
#include "support/test_util.hpp"

using namespace dcshap;

namespace {

LocalTransform sample_transform(Rng& rng) {
    DataMatrix data;
    data.values = testing::random_matrix(rng, 30, 4);
    data.feature_names = {"a", "b", "c", "d"};
    return fit_local_transform(data, 3);
}

}  // namespace

TEST_CASE("local transform survives a JSON round trip exactly") {
    Rng rng(1);
    const LocalTransform t = sample_transform(rng);
    const std::string text = to_json(t);
    const LocalTransform back = local_transform_from_json(text);
    CHECK(back.projection == t.projection);
    CHECK(back.centering == t.centering);
    CHECK(back.scaling == t.scaling);
    CHECK(to_json(back) == text);
}

TEST_CASE("party state keeps its shard, transform, and integration map") {
    Rng rng(2);
    PartyState party;
    party.party_id = 3;
    party.data.features.values = testing::random_matrix(rng, 10, 4);
    party.data.features.feature_names = {"a", "b", "c", "d"};
    party.data.labels.assign(10, 1);
    party.transform = sample_transform(rng);
    IntegrationMap map;
    map.matrix = testing::random_matrix(rng, 3, 3);
    map.residual = 0.125;
    party.integration = map;

    const PartyState back = party_state_from_json(to_json(party));
    CHECK(back.party_id == 3);
    CHECK(back.data.features.values == party.data.features.values);
    CHECK(back.data.labels == party.data.labels);
    REQUIRE(back.integration.has_value());
    CHECK(back.integration->matrix == map.matrix);
    CHECK(back.integration->residual == 0.125);

    party.integration.reset();
    const PartyState plain = party_state_from_json(to_json(party));
    CHECK_FALSE(plain.integration.has_value());
}

TEST_CASE("a reloaded model predicts identically") {
    Rng rng(3);
    CollaborationModel model;
    model.k = 5;
    model.positive_class = 0;
    model.training_points = testing::random_matrix(rng, 50, 3);
    model.training_labels.resize(50);
    for (auto& label : model.training_labels) label = static_cast<int>(rng.below(2));
    model.finalize();

    const CollaborationModel back = collaboration_model_from_json(to_json(model));
    CHECK(back.k == 5);
    CHECK(back.positive_class == 0);
    const Matrix queries = testing::random_matrix(rng, 20, 3);
    CHECK(back.predict_proba(queries) == model.predict_proba(queries));
}

TEST_CASE("attribution documents expose base, prediction, and per-feature rows") {
    Attribution att;
    att.base = 0.25;
    att.predicted = 0.75;
    att.phi = Vector(2);
    att.phi << 0.4, 0.1;
    att.feature_names = {"age", "bmi"};
    att.feature_values = Vector(2);
    att.feature_values << 50, 31.5;
    att.role = "horizontal";

    const std::string text = to_json(att);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["kind"] == "attribution");
    CHECK(doc["format_version"] == 1);
    CHECK(doc["base"] == 0.25);
    CHECK(doc["predicted"] == 0.75);
    CHECK(doc["role"] == "horizontal");
    REQUIRE(doc["features"].size() == 2);
    CHECK(doc["features"][0]["name"] == "age");
    CHECK(doc["features"][0]["value"] == 50.0);
    CHECK(doc["features"][0]["phi"] == 0.4);

    const Attribution back = attribution_from_json(text);
    CHECK(back.base == att.base);
    CHECK(back.predicted == att.predicted);
    CHECK(back.phi == att.phi);
    CHECK(back.feature_names == att.feature_names);
    CHECK(back.feature_values == att.feature_values);
    CHECK(back.role == "horizontal");

    att.role.clear();
    CHECK_FALSE(nlohmann::json::parse(to_json(att)).contains("role"));
    CHECK(attribution_from_json(to_json(att)).role.empty());

    att.feature_names = {"only-one"};
    CHECK_THROWS_AS(to_json(att), DataError);
}

TEST_CASE("message logs serialize every exchange") {
    MessageLog log;
    log.record("party0", "server", "training_representation", 100, 6);
    const auto doc = nlohmann::json::parse(to_json(log));
    CHECK(doc["kind"] == "message_log");
    REQUIRE(doc["messages"].size() == 1);
    CHECK(doc["messages"][0]["sender"] == "party0");
    CHECK(doc["messages"][0]["cols"] == 6);
}

TEST_CASE("documents reject the wrong kind, version, or syntax") {
    Rng rng(4);
    const std::string transform_doc = to_json(sample_transform(rng));
    CHECK_THROWS_AS(collaboration_model_from_json(transform_doc), DataError);
    CHECK_THROWS_AS(local_transform_from_json("{not json"), DataError);

    auto doc = nlohmann::json::parse(transform_doc);
    doc["format_version"] = 2;
    CHECK_THROWS_AS(local_transform_from_json(doc.dump()), DataError);

    doc = nlohmann::json::parse(transform_doc);
    doc["centering"] = {1.0};  // width no longer matches the projection
    CHECK_THROWS_AS(local_transform_from_json(doc.dump()), DataError);
}

TEST_CASE("text files round trip and missing paths fail loudly") {
    const std::string dir = testing::scratch_dir("serialize_files");
    const std::string path = dir + "/doc.json";
    const std::string text = "line1\nline2\n";
    write_text_file(path, text);
    CHECK(read_text_file(path) == text);
    CHECK_THROWS_AS(read_text_file(dir + "/absent.json"), DataError);
    CHECK_THROWS_AS(write_text_file(dir + "/no/such/dir/doc.json", text), DataError);
}

TEST_CASE("bar chart output is byte-stable and well-formed") {
    Matrix values(2, 2);
    values << 0.5, -0.25, 0.1, 0.2;
    const std::string svg =
        svg_grouped_bars({"age", "bmi"}, {"KernelSHAP", "DC-SHAP"}, values, "by feature");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("by feature") != std::string::npos);
    CHECK(svg.find("KernelSHAP") != std::string::npos);
    CHECK(svg.find("age") != std::string::npos);

    const std::string again =
        svg_grouped_bars({"age", "bmi"}, {"KernelSHAP", "DC-SHAP"}, values, "by feature");
    CHECK(again == svg);

    CHECK_THROWS_AS(svg_grouped_bars({"age"}, {"s"}, values, "t"), DataError);
}

TEST_CASE("scatter output escapes markup in labels") {
    Vector x(3), y(3);
    x << 0, 1, 2;
    y << 0.1, 0.9, 2.2;
    const std::string svg = svg_scatter(x, y, "full <phi>", "partial & phi", "a<b");
    CHECK(svg.find("full &lt;phi&gt;") != std::string::npos);
    CHECK(svg.find("partial &amp; phi") != std::string::npos);
    CHECK(svg.find("a&lt;b") != std::string::npos);
    CHECK(svg.find("<phi>") == std::string::npos);

    CHECK_THROWS_AS(svg_scatter(x, Vector::Zero(2), "x", "y", "t"), DataError);
}

TEST_CASE("force plot lays contributions between base and prediction") {
    Attribution att;
    att.base = 0.2;
    att.predicted = 0.7;
    att.phi = Vector(3);
    att.phi << 0.4, -0.1, 0.2;
    att.feature_names = {"age", "bmi", "glucose"};
    att.feature_values = Vector(3);
    att.feature_values << 61, 24.3, 99;

    const std::string svg = svg_force_plot(att, "sample 0");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("sample 0") != std::string::npos);
    CHECK(svg.find("age") != std::string::npos);
    CHECK(svg_force_plot(att, "sample 0") == svg);
}
