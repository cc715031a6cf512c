#pragma once

#include <string>

#include "dcshap/dc.hpp"
#include "dcshap/dcshap.hpp"
#include "dcshap/kernelshap.hpp"
#include "dcshap/messages.hpp"

namespace dcshap {

/// Versioned JSON documents (format_version 1). Keys are emitted in sorted
/// order and doubles in shortest round-trip form, so serializing the same
/// object always yields the same bytes and loading restores exact values.

std::string to_json(const LocalTransform& transform);
LocalTransform local_transform_from_json(const std::string& text);

std::string to_json(const PartyState& party);
PartyState party_state_from_json(const std::string& text);

std::string to_json(const CollaborationModel& model);
CollaborationModel collaboration_model_from_json(const std::string& text);

/// {base, predicted, features: [{name, value, phi}]} plus a role tag when
/// the attribution came from a protocol run.
std::string to_json(const Attribution& attribution);
Attribution attribution_from_json(const std::string& text);

std::string to_json(const MessageLog& log);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace dcshap
