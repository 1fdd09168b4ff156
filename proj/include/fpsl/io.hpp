#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "fpsl/bigraph.hpp"
#include "fpsl/model.hpp"

namespace fpsl {

inline nlohmann::json graph_to_json(const BiTree& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back(
            {{"id", v.id}, {"side", v.side == Side::L ? "L" : "R"}, {"label", v.label}});
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
    j["left_root"] = g.left_root ? nlohmann::json(*g.left_root) : nlohmann::json(nullptr);
    j["right_root"] = g.right_root ? nlohmann::json(*g.right_root) : nlohmann::json(nullptr);
    return j;
}

inline BiTree graph_from_json(const nlohmann::json& j) {
    BiTree g;
    for (const auto& v : j.at("vertices")) {
        std::string side = v.at("side").get<std::string>();
        if (side != "L" && side != "R") throw std::invalid_argument("side must be L or R");
        g.vertices.push_back({v.at("id").get<int>(), side == "L" ? Side::L : Side::R,
                              v.at("label").get<Symbol>()});
    }
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2) throw std::invalid_argument("edge must have two endpoints");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (!j.at("left_root").is_null()) g.left_root = j.at("left_root").get<int>();
    if (!j.at("right_root").is_null()) g.right_root = j.at("right_root").get<int>();
    for (const auto& v : g.vertices)
        if (!g.has_vertex(v.id)) throw std::invalid_argument("bad vertex id");
    if (g.left_root && !g.has_vertex(*g.left_root))
        throw std::invalid_argument("left_root is not a vertex");
    if (g.right_root && !g.has_vertex(*g.right_root))
        throw std::invalid_argument("right_root is not a vertex");
    return g;
}

inline nlohmann::json algebra_to_json(const FiniteAlgebra& m) {
    return {{"elements", m.elements}, {"table", m.table}};
}

inline FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
    FiniteAlgebra m;
    m.elements = j.at("elements").get<std::vector<std::string>>();
    m.table = j.at("table").get<std::vector<std::vector<int>>>();
    m.validate();
    return m;
}

/// DOT rendering: left vertices on the bottom rank, right vertices on
/// top, the distinguished edge drawn thicker.
inline std::string to_dot(const BiTree& g) {
    std::ostringstream out;
    out << "graph {\n  rankdir=BT;\n";
    out << "  { rank=min;";
    for (const auto& v : g.vertices)
        if (v.side == Side::L) out << " v" << v.id << ";";
    out << " }\n  { rank=max;";
    for (const auto& v : g.vertices)
        if (v.side == Side::R) out << " v" << v.id << ";";
    out << " }\n";
    for (const auto& v : g.vertices) {
        out << "  v" << v.id << " [label=\"" << v.label << "\"";
        bool is_root = (g.left_root && *g.left_root == v.id) ||
                       (g.right_root && *g.right_root == v.id);
        if (is_root) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (auto [a, b] : g.edges) {
        out << "  v" << a << " -- v" << b;
        std::pair<int, int> roots{-1, -1};
        if (g.left_root && g.right_root)
            roots = std::minmax(*g.left_root, *g.right_root);
        if (roots == std::pair<int, int>(a, b))
            out << " [penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace fpsl
