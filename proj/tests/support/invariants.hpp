#pragma once

#include "chordal/almond_tree.hpp"
#include "chordal/graph.hpp"
#include "chordal/ibarra_graph.hpp"
#include "chordal/junction_tree.hpp"

namespace chordal::testing {

/// Full structural validation of a junction tree against the graph it is
/// supposed to represent: vertex set, tree shape, junction property, vertex
/// map, export equality. Uses EXPECT so failures name the broken invariant.
void check_junction_tree(const JunctionTree& jt, const UndirectedGraph& expected);

/// As above for Almond trees: adds edge orientation, childless cliques,
/// children counts (multiplicity + 1) and the no-redundant-separator rule.
void check_almond_tree(const AlmondTree& at, const UndirectedGraph& expected);

/// As above for Ibarra graphs: definitional edge condition via equality with
/// the from-scratch rebuild, ancestor/subset duality, junction property.
void check_ibarra_graph(const IbarraGraph& ig, const UndirectedGraph& expected);

/// Total edge weight of a heaviest spanning tree of the junction graph of
/// `g` (vertices: cliques and separators, edges: strict subset pairs
/// weighted by subset size).
int heaviest_junction_spanning_tree_weight(const UndirectedGraph& g);

/// Sum of |S| over the (directed) edges of an Almond tree.
int almond_tree_weight(const AlmondTree& at);

} // namespace chordal::testing
