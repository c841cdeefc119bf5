#pragma once

#include <random>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/set_graph.hpp"
#include "chordal/vertex_set.hpp"

namespace chordal::oracle {

/// Deliberately naive ground truth used to verify the incremental
/// representations. Nothing here is on a sampling hot path.

/// True iff g is chordal: maximum-cardinality search followed by a
/// perfect-elimination-ordering check.
bool is_decomposable(const UndirectedGraph& g);

/// All maximal complete vertex sets (Bron-Kerbosch with pivoting), sorted by
/// (size, content).
std::vector<VertexSet> enumerate_cliques(const UndirectedGraph& g);

/// A perfect ordering of the cliques: separators[i] = cliques[i] intersected
/// with the union of its predecessors (separators[0] is unused and empty).
struct PerfectOrdering {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> separators;
};

/// Deterministic perfect ordering (greedy maximum-intersection order).
/// Throws StructuralError when g is not decomposable.
PerfectOrdering perfect_ordering(const UndirectedGraph& g);
/// Same, with ties broken at random: every valid ordering yields the same
/// separator multiset, which tests exploit.
PerfectOrdering perfect_ordering(const UndirectedGraph& g, std::mt19937_64& rng);

/// The separator multiset of g (order-invariant). Throws StructuralError
/// when g is not decomposable.
SeparatorMultiset separator_multiset(const UndirectedGraph& g);

/// Junction property: for every A, the set-graph vertices containing A
/// induce a connected subgraph. Tests A over the empty set, all singletons
/// and all pairwise intersections of vertex sets, which is sufficient since
/// connectivity for any other A follows from the intersections that occur.
bool check_junction_property(const SetGraph& sg);

/// Brute force over all subsets of {0..n-1}; n <= 20.
bool check_junction_property_exhaustive(const SetGraph& sg, int n);

/// The unique clique-separator graph of g built straight from the
/// definition: directed edges from each separator to its strict supersets
/// with no separator strictly in between.
SetGraph rebuild_ibarra(const UndirectedGraph& g);

/// Toggles edge (x,y) and reports whether the perturbed graph is
/// decomposable.
bool legality_oracle(const UndirectedGraph& g, VertexId x, VertexId y);

} // namespace chordal::oracle
