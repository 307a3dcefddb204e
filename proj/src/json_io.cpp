#include "gradedroots/json_io.hpp"

#include "gradedroots/errors.hpp"

namespace gradedroots {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

Json graph_to_json(const PlumbingGraph& graph) {
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < graph.size(); ++v) j["vertices"].push_back({{"id", v}, {"weight", graph.weight(v)}});
    j["edges"] = Json::array();
    for (auto [a, b] : graph.edges()) j["edges"].push_back({a, b});
    j["base"] = graph.base();
    return j;
}

ParsedGraph graph_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
            throw Error(ErrorKind::ParseError, "graph JSON needs 'vertices' and 'edges'");
        std::vector<std::pair<int, Int>> raw;
        for (const auto& v : j.at("vertices")) raw.emplace_back(v.at("id").get<int>(), v.at("weight").get<Int>());
        const int s = static_cast<int>(raw.size());
        std::vector<Int> weights(s);
        std::vector<bool> seen(s, false);
        for (auto [id, w] : raw) {
            if (id < 0 || id >= s || seen[id]) throw Error(ErrorKind::ParseError, "vertex ids must be 0..s-1, unique");
            seen[id] = true;
            weights[id] = w;
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edges must be [a,b] pairs");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        std::optional<int> base;
        if (j.contains("base") && !j.at("base").is_null()) base = j.at("base").get<int>();

        CanonicalBuild built = build_graph_with_map(weights, edges, base);
        bool remapped = false;
        for (int old = 0; old < s; ++old)
            if (built.id_map[old] != old) remapped = true;
        return ParsedGraph{std::move(built.graph), std::move(built.id_map), remapped};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

Json id_map_to_json(const std::vector<int>& id_map) {
    Json j;
    j["id_map"] = Json::array();
    for (int old = 0; old < static_cast<int>(id_map.size()); ++old)
        j["id_map"].push_back({{"input", old}, {"canonical", id_map[old]}});
    return j;
}

Json trace_to_json(const LauferTrace& trace) {
    Json j;
    j["tau"] = trace.tau;
    j["steps"] = Json::array();
    for (const LauferStep& s : trace.steps) j["steps"].push_back({{"k", s.k.k}, {"chi0", s.chi0}});
    j["N"] = trace.stop_index;
    return j;
}

Json module_to_json(const GradedFUModule& module) {
    Json j;
    j["shift"] = rational_to_string(module.shift);
    j["tower_bottom"] = rational_to_string(module.tower_bottom);
    j["reduced"] = Json::array();
    for (const auto& [deg, rank] : module.reduced)
        j["reduced"].push_back({{"deg", rational_to_string(deg)}, {"rank", rank}});
    return j;
}

std::string sigma_value_string(const SigmaValue& s) {
    return s.minus_infinity ? std::string("-inf") : std::to_string(s.value);
}

Json sigma_to_json(const ContactLocation& loc) {
    Json j;
    j["k"] = loc.k.k;
    j["laufer_index"] = loc.laufer_index;
    j["leaf_grade"] = loc.vertex_grade;
    if (loc.sigma.minus_infinity)
        j["sigma"] = "-inf";
    else
        j["sigma"] = loc.sigma.value;
    return j;
}

Json semigroup_to_json(const SemigroupTau& st) {
    Json j;
    j["p"] = st.p;
    j["q"] = st.q;
    j["delta"] = st.delta;
    j["minima"] = Json::array();
    for (auto [idx, val] : st.minima) j["minima"].push_back({{"index", idx}, {"tau", val}});
    j["maxima"] = Json::array();
    for (auto [idx, val] : st.maxima) j["maxima"].push_back({{"index", idx}, {"tau", val}});
    return j;
}

Json classification_to_json(const LinkClassification& c) {
    Json j;
    switch (c.kind) {
        case LinkClassification::Kind::Rational: j["classification"] = "rational"; break;
        case LinkClassification::Kind::ProperAR: j["classification"] = "proper_ar"; break;
        case LinkClassification::Kind::NotDetected: j["classification"] = "not_detected"; break;
    }
    j["ar_bases"] = c.ar_bases;
    if (c.sigma_K) {
        if (c.sigma_K->minus_infinity)
            j["sigma_K"] = "-inf";
        else
            j["sigma_K"] = c.sigma_K->value;
    }
    if (c.root) {
        j["root"] = {{"vertices", c.root->size()},
                     {"leaves", static_cast<int>(c.root->leaves().size())},
                     {"min_grade", c.root->min_grade()},
                     {"max_grade", c.root->max_grade()}};
    }
    return j;
}

namespace {

const char* move_name(Move::Type t) {
    switch (t) {
        case Move::Type::CancelNegative: return "cancel_negative";
        case Move::Type::TradePositive: return "trade_positive";
        case Move::Type::AppendChain: return "append_chain";
        case Move::Type::AppendDelta: return "append_delta";
    }
    return "unknown";
}

}  // namespace

Json plan_to_json(const CobordismPlan& plan) {
    Json j;
    j["genus"] = plan.genus;
    j["n"] = plan.n;
    j["n0"] = plan.n0;
    j["input"] = word_to_string(plan.input);
    j["moves"] = Json::array();
    for (const Move& m : plan.moves) {
        Json mj;
        mj["type"] = move_name(m.type);
        if (m.position >= 0) mj["position"] = m.position;
        if (m.type == Move::Type::AppendDelta) mj["count"] = m.count;
        mj["twists"] = m.twists * (m.type == Move::Type::AppendDelta ? m.count : 1);
        j["moves"].push_back(std::move(mj));
    }
    j["added_twists"] = plan.added_twists;
    j["normal_form"] = word_to_string(normal_form_word(plan.genus, plan.n));
    j["target"] = {plan.target[0], plan.target[1], plan.target[2]};
    return j;
}

}  // namespace gradedroots
