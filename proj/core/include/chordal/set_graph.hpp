#pragma once

#include <utility>
#include <vector>

#include "chordal/vertex_set.hpp"

namespace chordal {

/// Graph whose vertices are VertexSets, indexed by content. Junction trees
/// store undirected edges (symmetric child entries); Almond trees and Ibarra
/// graphs store directed subset-to-superset edges via children/parents.
/// Node ids stay stable while a vertex is alive; slots are recycled.
class SetGraph {
public:
    using NodeId = int;
    static constexpr NodeId kNoNode = -1;

    NodeId add_vertex(VertexSet s); // StructuralError when already present
    void remove_vertex(NodeId id);  // detaches every incident edge

    NodeId find(const VertexSet& s) const; // kNoNode when absent
    bool has_vertex(const VertexSet& s) const { return find(s) != kNoNode; }
    bool alive(NodeId id) const;
    const VertexSet& set_of(NodeId id) const;

    void add_directed_edge(NodeId from, NodeId to); // StructuralError on dup/self
    void remove_directed_edge(NodeId from, NodeId to);
    /// Removes the edge between a and b whichever direction it is stored in.
    void remove_edge_between(NodeId a, NodeId b);
    bool has_directed_edge(NodeId from, NodeId to) const;

    void add_undirected_edge(NodeId a, NodeId b);
    void remove_undirected_edge(NodeId a, NodeId b);

    const std::vector<NodeId>& children(NodeId id) const;
    const std::vector<NodeId>& parents(NodeId id) const;
    int degree(NodeId id) const;

    template <typename F>
    void for_each_neighbour(NodeId id, F&& f) const {
        for (NodeId c : children(id)) f(c);
        for (NodeId p : parents(id)) f(p);
    }

    int vertex_count() const { return alive_count_; }
    /// Stored arcs; an undirected edge contributes two.
    std::size_t arc_count() const { return arc_count_; }

    std::vector<NodeId> node_ids() const; // alive ids, ascending

    /// Content views, sorted, for structure comparison and export.
    std::vector<VertexSet> vertex_sets() const;
    std::vector<std::pair<VertexSet, VertexSet>> directed_edges() const;
    std::vector<std::pair<VertexSet, VertexSet>> undirected_edges() const;

    bool same_structure(const SetGraph& other) const;

private:
    struct Node {
        VertexSet set;
        std::vector<NodeId> children;
        std::vector<NodeId> parents;
        bool alive = false;
    };

    const Node& node(NodeId id) const;
    Node& node(NodeId id);

    std::vector<Node> nodes_;
    std::vector<NodeId> free_;
    std::unordered_map<VertexSet, NodeId, VertexSetHash> index_;
    int alive_count_ = 0;
    std::size_t arc_count_ = 0;
};

} // namespace chordal
