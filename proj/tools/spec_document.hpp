#pragma once

// JSON network documents for the command-line tool. Kept free of any
// library dependency besides the JSON parser so tests can include it too.
//
// Schema:
//   nodes          int or list of unique names (1-based indices otherwise)
//   noise_sources  int, optional, default 0
//   edges          required list of {from, to, kind}
//   noise_edges    optional list of {source, to, kind}, source in 1..p
//   excited        optional list of nodes
// Node references are integers or, when `nodes` is a name list, names.
// kind is "parametrized" or "fixed".

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace netid_cli {

struct DocumentError {
    std::string message;
};

struct DocEdge {
    int from = 0;
    int to = 0;
    bool fixed = false;

    friend auto operator<=>(const DocEdge&, const DocEdge&) = default;
};

struct SpecDocument {
    int node_count = 0;
    int noise_count = 0;
    std::vector<std::string> names; // empty when nodes was given as a count
    std::vector<DocEdge> edges;
    std::vector<DocEdge> noise_edges; // from = noise source number 1..p
    std::vector<int> excited;

    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;

    std::string node_name(int v) const {
        if (v > node_count) return "e" + std::to_string(v - node_count);
        if (!names.empty()) return names[v - 1];
        return "w" + std::to_string(v);
    }
};

namespace detail {

[[noreturn]] inline void bail(const std::string& message) {
    throw DocumentError{message};
}

inline int node_ref(const nlohmann::json& value, const SpecDocument& doc,
                    const std::string& where) {
    if (value.is_number_integer()) {
        const int v = value.get<int>();
        if (v < 1 || v > doc.node_count)
            bail(where + ": node index " + std::to_string(v) + " out of range");
        return v;
    }
    if (value.is_string()) {
        const std::string name = value.get<std::string>();
        for (std::size_t i = 0; i < doc.names.size(); ++i)
            if (doc.names[i] == name) return static_cast<int>(i) + 1;
        bail(where + ": unknown node name '" + name + "'");
    }
    bail(where + ": node reference must be an integer or a name");
}

inline bool kind_ref(const nlohmann::json& edge, const std::string& where) {
    if (!edge.contains("kind")) bail(where + ": missing 'kind'");
    const std::string kind = edge.at("kind").get<std::string>();
    if (kind == "parametrized") return false;
    if (kind == "fixed") return true;
    bail(where + ": kind must be 'parametrized' or 'fixed', got '" + kind + "'");
}

} // namespace detail

inline SpecDocument parse_document(const nlohmann::json& j) {
    using detail::bail;
    if (!j.is_object()) bail("document root must be an object");

    SpecDocument doc;
    if (!j.contains("nodes")) bail("missing required key 'nodes'");
    const nlohmann::json& nodes = j.at("nodes");
    if (nodes.is_number_integer()) {
        doc.node_count = nodes.get<int>();
    } else if (nodes.is_array()) {
        for (const auto& name : nodes) {
            if (!name.is_string()) bail("'nodes' list entries must be strings");
            doc.names.push_back(name.get<std::string>());
        }
        doc.node_count = static_cast<int>(doc.names.size());
        std::map<std::string, int> seen;
        for (const std::string& name : doc.names)
            if (++seen[name] > 1) bail("duplicate node name '" + name + "'");
    } else {
        bail("'nodes' must be a count or a list of names");
    }
    if (doc.node_count < 1) bail("'nodes' must describe at least one node");

    doc.noise_count = j.value("noise_sources", 0);
    if (doc.noise_count < 0) bail("'noise_sources' must be nonnegative");

    if (!j.contains("edges")) bail("missing required key 'edges'");
    if (!j.at("edges").is_array()) bail("'edges' must be a list");
    int index = 0;
    for (const auto& edge : j.at("edges")) {
        const std::string where = "edges[" + std::to_string(index++) + "]";
        if (!edge.is_object() || !edge.contains("from") || !edge.contains("to"))
            bail(where + ": need 'from', 'to' and 'kind'");
        DocEdge e;
        e.from = detail::node_ref(edge.at("from"), doc, where);
        e.to = detail::node_ref(edge.at("to"), doc, where);
        e.fixed = detail::kind_ref(edge, where);
        doc.edges.push_back(e);
    }

    index = 0;
    for (const auto& edge : j.value("noise_edges", nlohmann::json::array())) {
        const std::string where = "noise_edges[" + std::to_string(index++) + "]";
        if (!edge.is_object() || !edge.contains("source") || !edge.contains("to"))
            bail(where + ": need 'source', 'to' and 'kind'");
        if (!edge.at("source").is_number_integer())
            bail(where + ": 'source' must be the noise source number");
        DocEdge e;
        e.from = edge.at("source").get<int>();
        if (e.from < 1 || e.from > doc.noise_count)
            bail(where + ": noise source " + std::to_string(e.from) + " out of range");
        e.to = detail::node_ref(edge.at("to"), doc, where);
        e.fixed = detail::kind_ref(edge, where);
        doc.noise_edges.push_back(e);
    }

    for (const auto& node : j.value("excited", nlohmann::json::array()))
        doc.excited.push_back(detail::node_ref(node, doc, "excited"));

    return doc;
}

inline SpecDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) detail::bail("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        detail::bail(std::string("json parse error: ") + e.what());
    }
    return parse_document(j);
}

// Canonical form: sorted edge lists, sorted excited set, names echoed when
// present. parse(serialize(doc)) == canonicalized doc.
inline nlohmann::ordered_json serialize_document(SpecDocument doc) {
    std::sort(doc.edges.begin(), doc.edges.end());
    std::sort(doc.noise_edges.begin(), doc.noise_edges.end());
    std::sort(doc.excited.begin(), doc.excited.end());
    doc.excited.erase(std::unique(doc.excited.begin(), doc.excited.end()),
                      doc.excited.end());

    nlohmann::ordered_json j;
    if (doc.names.empty())
        j["nodes"] = doc.node_count;
    else
        j["nodes"] = doc.names;
    j["noise_sources"] = doc.noise_count;

    auto node_json = [&](int v) -> nlohmann::ordered_json {
        if (!doc.names.empty()) return doc.names[v - 1];
        return v;
    };
    j["edges"] = nlohmann::ordered_json::array();
    for (const DocEdge& e : doc.edges)
        j["edges"].push_back({{"from", node_json(e.from)},
                              {"to", node_json(e.to)},
                              {"kind", e.fixed ? "fixed" : "parametrized"}});
    j["noise_edges"] = nlohmann::ordered_json::array();
    for (const DocEdge& e : doc.noise_edges)
        j["noise_edges"].push_back({{"source", e.from},
                                    {"to", node_json(e.to)},
                                    {"kind", e.fixed ? "fixed" : "parametrized"}});
    j["excited"] = nlohmann::ordered_json::array();
    for (int v : doc.excited) j["excited"].push_back(node_json(v));
    return j;
}

} // namespace netid_cli
