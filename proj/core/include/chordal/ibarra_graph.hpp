#pragma once

#include <vector>

#include "chordal/graph.hpp"
#include "chordal/representation.hpp"
#include "chordal/set_graph.hpp"

namespace chordal {

/// Ibarra clique-separator graph backend: the unique DAG over the cliques
/// and separators with a directed edge (S,T) exactly when S is a strict
/// subset of T with no separator strictly in between. A set's ancestors are
/// its subset vertices and its descendants its superset vertices; cliques
/// are childless. The empty set appears as a vertex exactly when the
/// represented graph is disconnected.
class IbarraGraph : public Representation {
public:
    explicit IbarraGraph(int vertex_count);

    std::string_view name() const override { return "ibarra"; }
    int vertex_count() const override { return n_; }

    SxyResult find_sxy(VertexId x, VertexId y) const override;
    MoveReport disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) override;
    MoveReport connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) override;
    UndirectedGraph export_graph() const override;

    /// Inserts x (not yet a vertex) given the existing vertex c with x
    /// strictly inside it: parent edges to the maximal subset vertices,
    /// child edges to the minimal superset vertices, shortcuts removed.
    void add_above(const VertexSet& x, const VertexSet& c);

    /// Removes s when its descendants form a single connected component
    /// (traversing descendant-to-descendant edges only), re-wiring parents
    /// to children that would otherwise lose the subset path. Returns
    /// whether s was removed.
    bool remove_redundant_separator(const VertexSet& s);

    const SetGraph& dag() const { return dag_; }
    const std::vector<SetGraph::NodeId>& vertex_clique_map() const { return vmap_; }

private:
    std::vector<SetGraph::NodeId> ancestors(SetGraph::NodeId id) const;
    std::vector<SetGraph::NodeId> descendants(SetGraph::NodeId id) const;
    bool is_ancestor(SetGraph::NodeId a, SetGraph::NodeId b) const;
    bool is_redundant(SetGraph::NodeId id) const;
    /// Removes a redundant vertex; returns the smallest former child, the
    /// deterministic stand-in used for the vertex map.
    SetGraph::NodeId collapse_redundant(SetGraph::NodeId id);
    SetGraph::NodeId add_above_node(const VertexSet& x, SetGraph::NodeId cid);

    int n_;
    SetGraph dag_;
    std::vector<SetGraph::NodeId> vmap_;
    UndirectedGraph edge_mirror_; // edge presence only, for precondition checks
};

} // namespace chordal
