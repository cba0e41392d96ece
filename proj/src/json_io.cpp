#include "arcmodel/json_io.hpp"

namespace arcmodel::io {

using nlohmann::json;

json endpoint_to_json(const Endpoint& e)
{
    if (e.is_minus_infinity())
        return json("-inf");
    return json(e.value());
}

Endpoint endpoint_from_json(const json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "-inf")
            return Endpoint::minus_infinity();
        throw ParseError("endpoint string must be \"-inf\", got " + j.dump());
    }
    if (j.is_number_integer())
        return Endpoint::finite(j.get<std::int64_t>());
    throw ParseError("endpoint must be an integer or \"-inf\", got " + j.dump());
}

json arc_to_json(const Arc& u)
{
    return json::array({endpoint_to_json(u.left()), endpoint_to_json(u.right())});
}

Arc arc_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("arc must be a two-element array, got " + j.dump());
    return Arc::make(endpoint_from_json(j[0]), endpoint_from_json(j[1]));
}

json arcset_to_json(const ArcSet& s)
{
    json arcs = json::array();
    for (const Arc& u : s)
        arcs.push_back(arc_to_json(u));
    return json{{"arcs", std::move(arcs)}};
}

ArcSet arcset_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("arcs") || !j["arcs"].is_array())
        throw ParseError("arc set must be an object with an \"arcs\" array");
    ArcSet set;
    for (const auto& item : j["arcs"])
        set.insert(arc_from_json(item));
    return set;
}

json saturated_to_json(const SaturatedArcSet& s)
{
    json j = arcset_to_json(s.arcs());
    j["saturated"] = true;
    return j;
}

SaturatedArcSet saturated_from_json(const json& j)
{
    // Re-verifies the invariant regardless of the marker.
    return SaturatedArcSet(arcset_from_json(j));
}

json ncp_to_json(const NCPartition& p)
{
    json blocks = json::array();
    for (const Block& b : p.blocks()) {
        json block = json::array();
        for (const Endpoint& e : b)
            block.push_back(endpoint_to_json(e));
        blocks.push_back(std::move(block));
    }
    return json{{"blocks", std::move(blocks)}};
}

NCPartition ncp_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw ParseError("partition must be an object with a \"blocks\" array");
    std::vector<Block> blocks;
    for (const auto& item : j["blocks"]) {
        if (!item.is_array())
            throw ParseError("partition block must be an array, got " + item.dump());
        Block b;
        for (const auto& e : item)
            b.push_back(endpoint_from_json(e));
        blocks.push_back(std::move(b));
    }
    return NCPartition(std::move(blocks));
}

json sequence_to_json(const ExceptionalSequence& e)
{
    json arcs = json::array();
    for (const Arc& u : e.arcs)
        arcs.push_back(arc_to_json(u));
    return json{{"sequence", std::move(arcs)}};
}

ExceptionalSequence sequence_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("sequence") || !j["sequence"].is_array())
        throw ParseError("sequence must be an object with a \"sequence\" array");
    ExceptionalSequence e;
    for (const auto& item : j["sequence"])
        e.arcs.push_back(arc_from_json(item));
    return e;
}

std::string dump(const json& j)
{
    return j.dump();
}

json parse(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON: " + text.substr(0, 80));
    return j;
}

} // namespace arcmodel::io
