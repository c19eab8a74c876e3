#ifndef ECC_IO_HPP
#define ECC_IO_HPP

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ecc/graph.hpp"
#include "ecc/reduce.hpp"

namespace ecc {

using ordered_json = nlohmann::ordered_json;

// On-disk graph form. Edges are [u, v] or [u, v, color]; a document never
// mixes the two. Serialization uses a fixed key order so round-trips are
// byte-stable.
struct GraphDocument {
    int version = 1;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, int>> edges;  // color 0 = none
    bool colored = false;
    std::map<std::string, std::string> roles;
    ordered_json meta;  // optional free-form block

    Graph to_graph() const {
        std::vector<std::pair<std::string, std::string>> es;
        for (auto& [a, b, c] : edges) es.emplace_back(a, b);
        return Graph(vertices, es);
    }

    // edge colors in the graph's edge order; requires a colored document
    std::vector<int> edge_colors(const Graph& g) const {
        if (!colored) throw error(errc::bad_input, "document has no edge colors");
        std::vector<int> out(g.m(), 0);
        for (auto& [a, b, c] : edges) out[g.edge_id(g.index_of(a), g.index_of(b))] = c;
        return out;
    }
};

inline GraphDocument make_document(const Graph& g, const std::vector<int>* colors = nullptr) {
    GraphDocument doc;
    doc.vertices = g.labels();
    doc.colored = colors != nullptr;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        doc.edges.emplace_back(g.label(u), g.label(v), colors ? (*colors)[e] : 0);
    }
    return doc;
}

inline GraphDocument make_document(const GadgetGraph& gg) {
    GraphDocument doc = make_document(gg.graph);
    doc.roles = gg.roles;
    doc.meta["kind"] = gg.meta.kind;
    doc.meta["num_vars"] = gg.meta.num_vars;
    doc.meta["num_clauses"] = gg.meta.num_clauses;
    if (!gg.v0.empty()) {
        doc.meta["v0"] = gg.v0;
        ordered_json p = ordered_json::array();
        for (auto& [a, b] : gg.ham_path) p.push_back({a, b});
        doc.meta["ham_path"] = p;
    }
    return doc;
}

inline std::string serialize(const GraphDocument& doc) {
    ordered_json j;
    j["version"] = doc.version;
    j["vertices"] = doc.vertices;
    ordered_json edges = ordered_json::array();
    for (auto& [a, b, c] : doc.edges) {
        if (doc.colored)
            edges.push_back({a, b, c});
        else
            edges.push_back({a, b});
    }
    j["edges"] = edges;
    if (!doc.roles.empty()) j["roles"] = doc.roles;
    if (!doc.meta.is_null() && !doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump(2) + "\n";
}

inline GraphDocument parse_document(std::istream& in) {
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error(errc::bad_input, std::string("bad graph document: ") + e.what());
    }
    GraphDocument doc;
    if (!j.contains("version") || !j.contains("vertices") || !j.contains("edges"))
        throw error(errc::bad_input, "graph document missing required fields");
    doc.version = j["version"].get<int>();
    doc.vertices = j["vertices"].get<std::vector<std::string>>();
    int colored = -1;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            throw error(errc::bad_input, "edge entries must be [u,v] or [u,v,color]");
        int is_col = e.size() == 3 ? 1 : 0;
        if (colored == -1)
            colored = is_col;
        else if (colored != is_col)
            throw error(errc::bad_input, "document mixes colored and uncolored edges");
        int c = is_col ? e[2].get<int>() : 0;
        if (is_col && c <= 0) throw error(errc::bad_input, "edge colors must be positive");
        doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), c);
    }
    doc.colored = colored == 1;
    if (j.contains("roles")) doc.roles = j["roles"].get<std::map<std::string, std::string>>();
    if (j.contains("meta")) doc.meta = j["meta"];
    return doc;
}

inline GraphDocument parse_document(const std::string& text) {
    std::istringstream in(text);
    return parse_document(in);
}

// DOT text with a fixed palette; role aliases decorate the vertex labels.
inline std::string to_dot(const GraphDocument& doc) {
    static const char* palette[] = {"red",    "blue",   "forestgreen", "orange",
                                    "purple", "brown",  "deeppink",    "cadetblue",
                                    "gold3",  "gray40", "darkcyan",    "olivedrab"};
    constexpr int palette_size = sizeof(palette) / sizeof(palette[0]);
    std::map<std::string, std::string> alias;
    for (auto& [role, vertex] : doc.roles) {
        if (!alias[vertex].empty()) alias[vertex] += " ";
        alias[vertex] += role;
    }
    std::ostringstream out;
    out << "graph {\n  node [shape=ellipse];\n";
    std::map<std::string, int> id;
    for (size_t i = 0; i < doc.vertices.size(); ++i) {
        id[doc.vertices[i]] = static_cast<int>(i);
        std::string label = doc.vertices[i];
        if (!alias[label].empty()) label += " = " + alias[label];
        out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (auto& [a, b, c] : doc.edges) {
        out << "  n" << id.at(a) << " -- n" << id.at(b);
        if (doc.colored)
            out << " [color=" << palette[(c - 1) % palette_size] << ", label=\"" << c << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ecc

#endif  // ECC_IO_HPP
