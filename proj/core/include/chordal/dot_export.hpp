#pragma once

#include <string>
#include <string_view>

#include "chordal/graph.hpp"
#include "chordal/set_graph.hpp"

namespace chordal {

/// Graphviz text for the plain graph: `graph <name> { ... }` with one node
/// per vertex id.
std::string to_dot(const UndirectedGraph& g, std::string_view name);

/// Undirected set-graph drawing (junction trees); node labels are the sets
/// and each edge is labelled with the intersection of its endpoints.
std::string to_dot_undirected(const SetGraph& sg, std::string_view name);

/// Directed set-graph drawing (Almond trees, clique-separator graphs).
std::string to_dot_directed(const SetGraph& sg, std::string_view name);

} // namespace chordal
