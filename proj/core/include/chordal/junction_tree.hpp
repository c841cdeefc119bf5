#pragma once

#include <vector>

#include "chordal/graph.hpp"
#include "chordal/representation.hpp"
#include "chordal/set_graph.hpp"

namespace chordal {

/// Junction-tree backend: an undirected tree whose vertices are the cliques
/// of the represented graph, with the junction property. Each tree edge
/// stands for the separator formed by the intersection of its endpoints.
/// A vertex-clique map seeds the searches.
class JunctionTree : public Representation {
public:
    explicit JunctionTree(int vertex_count);

    std::string_view name() const override { return "junction"; }
    int vertex_count() const override { return n_; }

    SxyResult find_sxy(VertexId x, VertexId y) const override;
    MoveReport disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) override;
    MoveReport connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) override;
    UndirectedGraph export_graph() const override;

    const SetGraph& tree() const { return tree_; }
    const std::vector<SetGraph::NodeId>& vertex_clique_map() const { return vmap_; }

private:
    int n_;
    SetGraph tree_;
    std::vector<SetGraph::NodeId> vmap_;
    UndirectedGraph edge_mirror_; // edge presence only, for precondition checks
};

} // namespace chordal
