#pragma once

#include <vector>

#include "chordal/graph.hpp"
#include "chordal/representation.hpp"
#include "chordal/set_graph.hpp"

namespace chordal {

/// Almond-tree backend: a spanning tree of the junction graph over the
/// cliques and separators with the junction property, every edge directed
/// from subset to superset. Cliques are childless; a separator has one more
/// child than its multiplicity, so a separator left with a single child is
/// redundant and gets collapsed.
class AlmondTree : public Representation {
public:
    explicit AlmondTree(int vertex_count);

    std::string_view name() const override { return "almond"; }
    int vertex_count() const override { return n_; }

    SxyResult find_sxy(VertexId x, VertexId y) const override;
    MoveReport disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) override;
    MoveReport connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) override;
    UndirectedGraph export_graph() const override;

    /// Collapses s when it has exactly one child (parents re-wired to the
    /// child); no change otherwise. Returns whether s was removed. Throws
    /// StructuralError when s is not a vertex.
    bool remove_redundant_separator(const VertexSet& s);

    const SetGraph& tree() const { return tree_; }
    const std::vector<SetGraph::NodeId>& vertex_clique_map() const { return vmap_; }

private:
    bool collapse_if_redundant(SetGraph::NodeId id); // returns true when removed
    SetGraph::NodeId resolve_connect_side(const VertexSet& side);

    int n_;
    SetGraph tree_;
    std::vector<SetGraph::NodeId> vmap_;
    UndirectedGraph edge_mirror_; // edge presence only, for precondition checks
};

} // namespace chordal
