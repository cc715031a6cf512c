#include "dcshap/dcshap.hpp"

#include <cmath>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

Vector aggregate_columns(const Matrix& values, AggregateStat stat) {
    return stat == AggregateStat::kMedian ? column_medians(values) : column_means(values);
}

}  // namespace

ReferenceValue anchor_median_reference(const AnchorSet& anchor, AggregateStat stat) {
    if (anchor.data.rows() == 0) throw DataError("anchor set is empty");
    return {aggregate_columns(anchor.data.values, stat), ReferenceOrigin::kAnchorMedian};
}

ReferenceValue party_data_reference(const DataMatrix& data, AggregateStat stat) {
    if (data.rows() == 0) throw DataError("party data is empty");
    return {aggregate_columns(data.values, stat), ReferenceOrigin::kPartyData};
}

Attribution explain_horizontal(const PartyState& party, const CollaborationModel& model,
                               const Vector& x, const AnchorSet& anchor,
                               AggregateStat stat) {
    if (x.size() != anchor.data.cols())
        throw DataError("instance width does not match the feature schema");

    ExplanationRequest request;
    request.x = x;
    request.r = anchor_median_reference(anchor, stat).r;
    request.feature_names = anchor.data.feature_names;
    request.model = [&party, &model](const Matrix& rows) {
        return model.predict_proba(to_unified(party, rows));
    };

    Attribution out = explain(request);
    out.role = "horizontal";
    return out;
}

Attribution explain_vertical_full(const VerticalCollab& collab, const Vector& x,
                                  const ReferenceValue& reference, MessageLog* log) {
    if (x.size() != collab.raw_width() || reference.r.size() != collab.raw_width())
        throw DataError("instance and reference must cover every raw feature");

    ExplanationRequest request;
    request.x = x;
    request.r = reference.r;
    request.feature_names = collab.feature_names;
    request.model = [&collab, log](const Matrix& rows) {
        if (log) {
            for (Index i = 0; i < collab.parties_count(); ++i) {
                const Index width = collab.raw_offsets[i + 1] - collab.raw_offsets[i];
                const std::string party = "party" + std::to_string(i);
                log->record("third_party", party, "masked_block", rows.rows(), width);
                log->record(party, "third_party", "block_representation", rows.rows(),
                            collab.rep_offsets[i + 1] - collab.rep_offsets[i]);
            }
        }
        return collab.model.predict_proba(collab.transform_blocks(rows));
    };

    Attribution out = explain(request);
    out.role = "third-party-full";
    return out;
}

VerticalExplainContext build_partial_context(const VerticalCollab& collab,
                                             Index host_party, const Vector& x_raw,
                                             const Vector& r_raw, std::string role,
                                             MessageLog* log) {
    if (collab.parties_count() != 2)
        throw ConfigError("the partial protocol is defined for exactly two parties");
    if (host_party < 0 || host_party > 1)
        throw ConfigError("host must be one of the two parties");
    if (x_raw.size() != collab.raw_width() || r_raw.size() != collab.raw_width())
        throw DataError("instance and reference must cover every raw feature");

    const Index guest_party = 1 - host_party;
    VerticalExplainContext ctx;
    ctx.host_begin = collab.raw_offsets[host_party];
    ctx.host_width = collab.raw_offsets[host_party + 1] - ctx.host_begin;
    ctx.guest_begin = collab.raw_offsets[guest_party];
    ctx.guest_width = collab.raw_offsets[guest_party + 1] - ctx.guest_begin;
    ctx.host_transform = collab.parties[static_cast<size_t>(host_party)].transform;
    ctx.host_rep_offset = collab.rep_offsets[host_party];
    ctx.guest_rep_offset = collab.rep_offsets[guest_party];
    ctx.host_feature_names.assign(
        collab.feature_names.begin() + ctx.host_begin,
        collab.feature_names.begin() + ctx.host_begin + ctx.host_width);
    ctx.role = std::move(role);

    const auto& guest = collab.parties[static_cast<size_t>(guest_party)];
    ctx.guest_rep_of_x = apply_transform(
        guest.transform, Vector(x_raw.segment(ctx.guest_begin, ctx.guest_width)));
    ctx.guest_rep_of_r = apply_transform(
        guest.transform, Vector(r_raw.segment(ctx.guest_begin, ctx.guest_width)));
    if (log) {
        log->record("guest", "host", "guest_rep_of_x", 1, ctx.guest_rep_of_x.size());
        log->record("guest", "host", "guest_rep_of_r", 1, ctx.guest_rep_of_r.size());
    }
    return ctx;
}

Attribution explain_vertical_partial(const VerticalExplainContext& ctx,
                                     const CollaborationModel& model,
                                     const Vector& x_host, const Vector& r_host) {
    if (x_host.size() != ctx.host_width || r_host.size() != ctx.host_width)
        throw DataError("host instance width does not match the host feature range");
    const Index rep_width = ctx.host_transform.projection.cols();
    if (ctx.guest_rep_of_x.size() != ctx.guest_rep_of_r.size())
        throw DataError("guest representations disagree on width");
    if (rep_width + ctx.guest_rep_of_x.size() != model.unified_dim())
        throw DataError("context does not assemble to the model's unified width");

    const Index m = ctx.host_width + 1;
    ExplanationRequest request;
    request.x = Vector(m);
    request.r = Vector(m);
    request.x.head(ctx.host_width) = x_host;
    request.r.head(ctx.host_width) = r_host;
    request.x[m - 1] = 1.0;  // aggregated indicator: guest block of x
    request.r[m - 1] = 0.0;  // aggregated indicator: guest block of r
    request.feature_names = ctx.host_feature_names;
    request.feature_names.push_back("DC Features");

    request.model = [&ctx, &model](const Matrix& rows) {
        const Index host_width = ctx.host_width;
        const Matrix host_reps =
            apply_transform(ctx.host_transform, Matrix(rows.leftCols(host_width)));
        Matrix unified(rows.rows(), model.unified_dim());
        for (Index i = 0; i < rows.rows(); ++i) {
            unified.row(i).segment(ctx.host_rep_offset, host_reps.cols()) =
                host_reps.row(i);
            const Vector& guest_rep =
                rows(i, host_width) != 0.0 ? ctx.guest_rep_of_x : ctx.guest_rep_of_r;
            unified.row(i).segment(ctx.guest_rep_offset, guest_rep.size()) =
                guest_rep.transpose();
        }
        return model.predict_proba(unified);
    };

    Attribution out = explain(request);
    out.role = ctx.role;
    // Report the host's raw values; the indicator has no raw-space value.
    out.feature_values = Vector(m);
    out.feature_values.head(ctx.host_width) = x_host;
    out.feature_values[m - 1] = 1.0;
    return out;
}

Vector compare_attributions_rmse(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DataError("attribution matrices have different shapes");
    if (a.rows() == 0) throw DataError("no attributions to compare");
    return ((a - b).array().square().colwise().mean()).sqrt().matrix().transpose();
}

double pearson_correlation(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DataError("series lengths differ");
    if (a.size() < 2) throw DataError("correlation needs at least two points");
    const Vector da = a.array() - a.mean();
    const Vector db = b.array() - b.mean();
    const double denom = std::sqrt(da.squaredNorm() * db.squaredNorm());
    if (denom == 0.0) return 0.0;
    return da.dot(db) / denom;
}

}  // namespace dcshap
