#include "chordal/dot_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace chordal {

namespace {

std::string set_label(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (VertexId v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

// Deterministic node naming: sets sorted by (size, content).
std::map<int, std::string> dot_node_names(const SetGraph& sg) {
    std::vector<std::pair<VertexSet, int>> order;
    for (SetGraph::NodeId id : sg.node_ids()) order.emplace_back(sg.set_of(id), id);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return size_lex_less(a.first, b.first);
    });
    std::map<int, std::string> names;
    int k = 0;
    for (const auto& [set, id] : order) names[id] = "S" + std::to_string(k++);
    return names;
}

} // namespace

std::string to_dot(const UndirectedGraph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.order(); ++v) out << "  V" << v << " [label=\"" << v << "\"];\n";
    for (const auto& [a, b] : g.edges()) out << "  V" << a << " -- V" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot_undirected(const SetGraph& sg, std::string_view name) {
    std::ostringstream out;
    const auto names = dot_node_names(sg);
    out << "graph " << name << " {\n";
    for (const auto& [id, nm] : names)
        out << "  " << nm << " [label=\"" << set_label(sg.set_of(id)) << "\"];\n";
    for (const auto& [id, nm] : names) {
        for (SetGraph::NodeId c : sg.children(id)) {
            if (!(sg.set_of(id) < sg.set_of(c))) continue; // each edge once
            const VertexSet sep = set_intersection(sg.set_of(id), sg.set_of(c));
            out << "  " << nm << " -- " << names.at(c) << " [label=\"" << set_label(sep)
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot_directed(const SetGraph& sg, std::string_view name) {
    std::ostringstream out;
    const auto names = dot_node_names(sg);
    out << "digraph " << name << " {\n";
    for (const auto& [id, nm] : names)
        out << "  " << nm << " [label=\"" << set_label(sg.set_of(id)) << "\"];\n";
    for (const auto& [id, nm] : names) {
        for (SetGraph::NodeId c : sg.children(id)) out << "  " << nm << " -> " << names.at(c)
                                                       << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace chordal
