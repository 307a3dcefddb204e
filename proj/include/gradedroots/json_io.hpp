#pragma once

#include <string>

#include <json.hpp>

#include "gradedroots/cobordism.hpp"
#include "gradedroots/contact.hpp"

namespace gradedroots {

using Json = nlohmann::ordered_json;

// Graph wire format: {"vertices":[{"id":0,"weight":-2},...],"edges":[[0,1],...],"base":0}
Json graph_to_json(const PlumbingGraph& graph);

struct ParsedGraph {
    PlumbingGraph graph;
    std::vector<int> id_map;  // input id -> canonical id
    bool remapped = false;
};
ParsedGraph graph_from_json(const Json& j);

Json trace_to_json(const LauferTrace& trace);

// Module wire format, all rationals as exact "p" / "p/q" strings.
Json module_to_json(const GradedFUModule& module);

Json sigma_to_json(const ContactLocation& location);

Json semigroup_to_json(const SemigroupTau& st);

Json classification_to_json(const LinkClassification& c);

Json plan_to_json(const CobordismPlan& plan);

Json id_map_to_json(const std::vector<int>& id_map);

std::string sigma_value_string(const SigmaValue& s);

Json parse_json(const std::string& text);

}  // namespace gradedroots
