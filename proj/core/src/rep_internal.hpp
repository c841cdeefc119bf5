#pragma once

// Helpers shared by the set-graph backends. Internal to core.

#include <optional>
#include <vector>

#include "chordal/errors.hpp"
#include "chordal/graph.hpp"
#include "chordal/search.hpp"
#include "chordal/set_graph.hpp"

namespace chordal::detail {

inline UndirectedGraph graph_from_cliques(const SetGraph& sg, int vertex_count,
                                          bool childless_only) {
    UndirectedGraph g(vertex_count);
    for (SetGraph::NodeId id : sg.node_ids()) {
        if (childless_only && !sg.children(id).empty()) continue;
        const auto& ids = sg.set_of(id).ids();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) g.add_edge(ids[i], ids[j]);
        }
    }
    return g;
}

/// Unique path between two vertices of a set-graph tree.
inline std::vector<int> tree_path(const SetGraph& sg, int from, int to) {
    auto path = find_path(
        from, [&](int v, auto&& f) { sg.for_each_neighbour(v, f); }, SearchDiscipline::kFifo,
        [](int) { return true; }, [&](int v) { return v == to; });
    if (!path) throw StructuralError("set-graph tree is disconnected");
    return *path;
}

/// Follows child edges until a childless vertex (a clique) is reached.
inline SetGraph::NodeId resolve_clique(const SetGraph& sg, SetGraph::NodeId id) {
    while (!sg.children(id).empty()) id = sg.children(id).front();
    return id;
}

/// Directed subset-to-superset edge with the orientation invariant checked.
inline void connect_subset_edge(SetGraph& sg, SetGraph::NodeId sub, SetGraph::NodeId sup) {
    if (!sg.set_of(sub).is_proper_subset_of(sg.set_of(sup)))
        throw StructuralError("edge endpoints are not in strict subset order: " +
                              sg.set_of(sub).to_string() + " -> " + sg.set_of(sup).to_string());
    sg.add_directed_edge(sub, sup);
}

} // namespace chordal::detail
