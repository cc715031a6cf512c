#pragma once

#include <string>
#include <vector>

#include "dcshap/dc.hpp"
#include "dcshap/kernelshap.hpp"
#include "dcshap/messages.hpp"

namespace dcshap {

enum class ReferenceOrigin { kAnchorMedian, kPartyData, kSupplied };
enum class AggregateStat { kMedian, kMean };

/// The "absent feature" vector every explanation measures against.
struct ReferenceValue {
    Vector r;
    ReferenceOrigin origin = ReferenceOrigin::kSupplied;
};

/// Column-wise aggregate of the shared anchor data. Because the anchor is
/// identical at every party, so is this baseline.
ReferenceValue anchor_median_reference(const AnchorSet& anchor,
                                       AggregateStat stat = AggregateStat::kMedian);

/// Column-wise aggregate of a party's own data; the baseline that is NOT
/// shared and therefore drifts between parties.
ReferenceValue party_data_reference(const DataMatrix& data,
                                    AggregateStat stat = AggregateStat::kMedian);

/// Row-partitioned protocol: one party explains a raw instance against the
/// shared anchor baseline through its own composed view of the shared model.
Attribution explain_horizontal(const PartyState& party, const CollaborationModel& model,
                               const Vector& x, const AnchorSet& anchor,
                               AggregateStat stat = AggregateStat::kMedian);

/// Column-partitioned, all features: a third party holding the assembled raw
/// x and r enumerates coalitions over every feature; each owner transforms
/// its own block of the synthetic rows.
Attribution explain_vertical_full(const VerticalCollab& collab, const Vector& x,
                                  const ReferenceValue& reference,
                                  MessageLog* log = nullptr);

/// Everything the requesting party of the partial protocol is allowed to
/// hold: its own raw range and transform, and the other party's block only
/// as fixed-width intermediate representations.
struct VerticalExplainContext {
    Index host_begin = 0;
    Index host_width = 0;
    Index guest_begin = 0;
    Index guest_width = 0;
    LocalTransform host_transform;
    Vector guest_rep_of_x;
    Vector guest_rep_of_r;
    Index host_rep_offset = 0;   ///< host rep columns in the unified space
    Index guest_rep_offset = 0;  ///< guest rep columns in the unified space
    std::vector<std::string> host_feature_names;
    std::string role = "host-partial";
};

/// Assembles the context for a two-party collaboration, logging what the
/// guest actually ships (representations, never raw columns).
VerticalExplainContext build_partial_context(const VerticalCollab& collab,
                                             Index host_party, const Vector& x_raw,
                                             const Vector& r_raw, std::string role,
                                             MessageLog* log = nullptr);

/// Column-partitioned, host view: coalitions over the host's features plus
/// one aggregated indicator that swaps the guest representation between x
/// and r atomically. The last attribution entry is labeled "DC Features".
Attribution explain_vertical_partial(const VerticalExplainContext& ctx,
                                     const CollaborationModel& model,
                                     const Vector& x_host, const Vector& r_host);

/// Per-feature root mean square difference between two attribution matrices
/// (rows = samples, columns = features).
Vector compare_attributions_rmse(const Matrix& a, const Matrix& b);

/// Pearson correlation of two equal-length series; 0 when either is constant.
double pearson_correlation(const Vector& a, const Vector& b);

}  // namespace dcshap
