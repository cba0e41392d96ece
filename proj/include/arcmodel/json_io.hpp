#pragma once

// JSON wire formats:
//   ArcSet            {"arcs": [["-inf",5],[0,3]]}        (sorted, -inf as string)
//   SaturatedArcSet   same plus "saturated": true         (re-verified on input)
//   NCPartition       {"blocks": [["-inf",5],[0,1,2]]}    (blocks by min element)
//   ExceptionalSequence {"sequence": [[0,1],[0,2]]}

#include "arcmodel/arc.hpp"
#include "arcmodel/exceptional.hpp"
#include "arcmodel/ncp.hpp"
#include "arcmodel/saturation.hpp"

#include <json.hpp>

#include <string>

namespace arcmodel::io {

nlohmann::json endpoint_to_json(const Endpoint& e);
Endpoint endpoint_from_json(const nlohmann::json& j);

nlohmann::json arc_to_json(const Arc& u);
Arc arc_from_json(const nlohmann::json& j);

nlohmann::json arcset_to_json(const ArcSet& s);
ArcSet arcset_from_json(const nlohmann::json& j);

nlohmann::json saturated_to_json(const SaturatedArcSet& s);
SaturatedArcSet saturated_from_json(const nlohmann::json& j);

nlohmann::json ncp_to_json(const NCPartition& p);
NCPartition ncp_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const ExceptionalSequence& e);
ExceptionalSequence sequence_from_json(const nlohmann::json& j);

// Dump with the single canonical formatting used everywhere.
std::string dump(const nlohmann::json& j);

// Parse text; throws ParseError on malformed JSON.
nlohmann::json parse(const std::string& text);

} // namespace arcmodel::io
