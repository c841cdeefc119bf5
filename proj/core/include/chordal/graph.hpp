#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chordal/vertex_set.hpp"

namespace chordal {

/// Undirected graph over the fixed vertex universe {0..n-1} with
/// adjacency-set storage. No self loops; adjacency stays symmetric under
/// every mutation. Vertices are never added or removed, only edges.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int vertex_count);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const { return v >= 0 && v < order(); }
    bool has_edge(VertexId x, VertexId y) const;

    /// Adds edge (x,y). Idempotent; throws StructuralError on self loops or
    /// unknown vertices.
    void add_edge(VertexId x, VertexId y);
    /// Removes edge (x,y); throws StructuralError when the edge is absent.
    void remove_edge(VertexId x, VertexId y);

    const VertexSet& neighbours(VertexId v) const;

    /// S_xy: the intersection of the adjacency sets of x and y. Never
    /// contains x or y themselves.
    VertexSet common_neighbours(VertexId x, VertexId y) const;

    /// True iff all pairs in U are adjacent (vacuously true for |U| <= 1).
    bool is_complete(const VertexSet& u) const;

    /// Edges as (min,max) pairs in ascending order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    void check_vertex(VertexId v) const;

    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// True iff every x-y path meets `blocker`. Requires x,y outside `blocker`;
/// vacuously true when no path exists at all.
bool separates(const UndirectedGraph& g, const VertexSet& blocker, VertexId x, VertexId y);

} // namespace chordal
