#include "dcshap/serialize.hpp"

#include <fstream>
#include <sstream>

#include "dcshap/error.hpp"
#include "json.hpp"

namespace dcshap {
namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& rows) {
    if (!rows.is_array()) throw DataError("matrix field is not an array");
    const Index r = static_cast<Index>(rows.size());
    if (r == 0) return Matrix(0, 0);
    const Index c = static_cast<Index>(rows[0].size());
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (static_cast<Index>(rows[static_cast<size_t>(i)].size()) != c)
            throw DataError("matrix rows have uneven lengths");
        for (Index j = 0; j < c; ++j)
            m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)].get<double>();
    }
    return m;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

Vector vector_from_json(const json& arr) {
    if (!arr.is_array()) throw DataError("vector field is not an array");
    Vector v(static_cast<Index>(arr.size()));
    for (Index i = 0; i < v.size(); ++i) v[i] = arr[static_cast<size_t>(i)].get<double>();
    return v;
}

json parse_document(const std::string& text, const char* expected_kind) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed JSON document: ") + e.what());
    }
    if (doc.value("format_version", 0) != kFormatVersion)
        throw DataError("unsupported document format version");
    if (doc.value("kind", std::string{}) != expected_kind)
        throw DataError(std::string("expected a ") + expected_kind + " document");
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json transform_fields(const LocalTransform& t) {
    return {{"projection", matrix_to_json(t.projection)},
            {"centering", vector_to_json(t.centering)},
            {"scaling", vector_to_json(t.scaling)}};
}

LocalTransform transform_from_fields(const json& doc) {
    LocalTransform t;
    t.projection = matrix_from_json(doc.at("projection"));
    t.centering = vector_from_json(doc.at("centering"));
    t.scaling = vector_from_json(doc.at("scaling"));
    if (t.centering.size() != t.projection.rows() ||
        t.scaling.size() != t.projection.rows())
        throw DataError("transform fields disagree on the input width");
    return t;
}

}  // namespace

std::string to_json(const LocalTransform& transform) {
    json doc = transform_fields(transform);
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "local_transform";
    return dump(doc);
}

LocalTransform local_transform_from_json(const std::string& text) {
    return transform_from_fields(parse_document(text, "local_transform"));
}

std::string to_json(const PartyState& party) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "party_state";
    doc["party_id"] = party.party_id;
    doc["data"] = {{"values", matrix_to_json(party.data.features.values)},
                   {"feature_names", party.data.features.feature_names},
                   {"labels", party.data.labels}};
    doc["transform"] = transform_fields(party.transform);
    if (party.integration) {
        doc["integration"] = {{"matrix", matrix_to_json(party.integration->matrix)},
                              {"residual", party.integration->residual}};
    }
    return dump(doc);
}

PartyState party_state_from_json(const std::string& text) {
    const json doc = parse_document(text, "party_state");
    PartyState party;
    party.party_id = doc.at("party_id").get<int>();
    const json& data = doc.at("data");
    party.data.features.values = matrix_from_json(data.at("values"));
    party.data.features.feature_names =
        data.at("feature_names").get<std::vector<std::string>>();
    party.data.labels = data.at("labels").get<std::vector<int>>();
    party.transform = transform_from_fields(doc.at("transform"));
    if (doc.contains("integration")) {
        IntegrationMap map;
        map.matrix = matrix_from_json(doc.at("integration").at("matrix"));
        map.residual = doc.at("integration").at("residual").get<double>();
        party.integration = std::move(map);
    }
    party.data.validate();
    return party;
}

std::string to_json(const CollaborationModel& model) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "collaboration_model";
    doc["k"] = model.k;
    doc["positive_class"] = model.positive_class;
    doc["training_points"] = matrix_to_json(model.training_points);
    doc["training_labels"] = model.training_labels;
    return dump(doc);
}

CollaborationModel collaboration_model_from_json(const std::string& text) {
    const json doc = parse_document(text, "collaboration_model");
    CollaborationModel model;
    model.k = doc.at("k").get<int>();
    model.positive_class = doc.at("positive_class").get<int>();
    model.training_points = matrix_from_json(doc.at("training_points"));
    model.training_labels = doc.at("training_labels").get<std::vector<int>>();
    model.finalize();
    return model;
}

std::string to_json(const Attribution& attribution) {
    const Index m = attribution.phi.size();
    if (static_cast<Index>(attribution.feature_names.size()) != m)
        throw DataError("attribution feature names do not match its width");
    const bool with_values = attribution.feature_values.size() == m;

    json features = json::array();
    for (Index i = 0; i < m; ++i) {
        json entry;
        entry["name"] = attribution.feature_names[static_cast<size_t>(i)];
        if (with_values) entry["value"] = attribution.feature_values[i];
        entry["phi"] = attribution.phi[i];
        features.push_back(std::move(entry));
    }

    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "attribution";
    doc["base"] = attribution.base;
    doc["predicted"] = attribution.predicted;
    doc["features"] = std::move(features);
    if (!attribution.role.empty()) doc["role"] = attribution.role;
    return dump(doc);
}

Attribution attribution_from_json(const std::string& text) {
    const json doc = parse_document(text, "attribution");
    Attribution out;
    out.base = doc.at("base").get<double>();
    out.predicted = doc.at("predicted").get<double>();
    const json& features = doc.at("features");
    out.phi = Vector(static_cast<Index>(features.size()));
    bool with_values = true;
    Vector values(out.phi.size());
    for (Index i = 0; i < out.phi.size(); ++i) {
        const json& entry = features[static_cast<size_t>(i)];
        out.feature_names.push_back(entry.at("name").get<std::string>());
        out.phi[i] = entry.at("phi").get<double>();
        if (entry.contains("value")) values[i] = entry.at("value").get<double>();
        else with_values = false;
    }
    if (with_values && out.phi.size() > 0) out.feature_values = values;
    out.role = doc.value("role", std::string{});
    return out;
}

std::string to_json(const MessageLog& log) {
    json messages = json::array();
    for (const auto& m : log.messages) {
        messages.push_back({{"sender", m.sender},
                            {"receiver", m.receiver},
                            {"kind", m.kind},
                            {"rows", m.rows},
                            {"cols", m.cols}});
    }
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "message_log";
    doc["messages"] = std::move(messages);
    return dump(doc);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << text;
    if (!out) throw DataError("failed while writing: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace dcshap
