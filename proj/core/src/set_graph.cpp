#include "chordal/set_graph.hpp"

#include <algorithm>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

bool erase_value(std::vector<SetGraph::NodeId>& v, SetGraph::NodeId x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) return false;
    v.erase(it);
    return true;
}

} // namespace

const SetGraph::Node& SetGraph::node(NodeId id) const {
    if (id < 0 || id >= static_cast<NodeId>(nodes_.size()) || !nodes_[id].alive)
        throw StructuralError("set-graph node id is not alive");
    return nodes_[id];
}

SetGraph::Node& SetGraph::node(NodeId id) {
    return const_cast<Node&>(static_cast<const SetGraph*>(this)->node(id));
}

bool SetGraph::alive(NodeId id) const {
    return id >= 0 && id < static_cast<NodeId>(nodes_.size()) && nodes_[id].alive;
}

SetGraph::NodeId SetGraph::add_vertex(VertexSet s) {
    if (index_.count(s))
        throw StructuralError("set-graph vertex already present: " + s.to_string());
    NodeId id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
        nodes_[id] = Node{};
    } else {
        id = static_cast<NodeId>(nodes_.size());
        nodes_.emplace_back();
    }
    index_.emplace(s, id);
    nodes_[id].set = std::move(s);
    nodes_[id].alive = true;
    ++alive_count_;
    return id;
}

void SetGraph::remove_vertex(NodeId id) {
    Node& n = node(id);
    // Undirected twins live in the other node's children; directed arcs in
    // its parents.
    for (NodeId c : n.children) {
        Node& other = node(c);
        if (!erase_value(other.parents, id)) erase_value(other.children, id);
        --arc_count_;
    }
    for (NodeId p : n.parents) {
        erase_value(node(p).children, id);
        --arc_count_;
    }
    index_.erase(n.set);
    n = Node{};
    free_.push_back(id);
    --alive_count_;
}

SetGraph::NodeId SetGraph::find(const VertexSet& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? kNoNode : it->second;
}

const VertexSet& SetGraph::set_of(NodeId id) const { return node(id).set; }

void SetGraph::add_directed_edge(NodeId from, NodeId to) {
    if (from == to) throw StructuralError("set-graph self edge rejected");
    Node& f = node(from);
    Node& t = node(to);
    if (std::find(f.children.begin(), f.children.end(), to) != f.children.end())
        throw StructuralError("duplicate set-graph edge " + f.set.to_string() + " -> " +
                              t.set.to_string());
    f.children.push_back(to);
    t.parents.push_back(from);
    ++arc_count_;
}

void SetGraph::remove_directed_edge(NodeId from, NodeId to) {
    Node& f = node(from);
    Node& t = node(to);
    if (!erase_value(f.children, to))
        throw StructuralError("set-graph edge to remove is absent");
    erase_value(t.parents, from);
    --arc_count_;
}

bool SetGraph::has_directed_edge(NodeId from, NodeId to) const {
    const auto& ch = node(from).children;
    return std::find(ch.begin(), ch.end(), to) != ch.end();
}

void SetGraph::remove_edge_between(NodeId a, NodeId b) {
    if (has_directed_edge(a, b)) {
        remove_directed_edge(a, b);
    } else if (has_directed_edge(b, a)) {
        remove_directed_edge(b, a);
    } else {
        throw StructuralError("no edge between the given set-graph vertices");
    }
}

void SetGraph::add_undirected_edge(NodeId a, NodeId b) {
    if (a == b) throw StructuralError("set-graph self edge rejected");
    Node& na = node(a);
    Node& nb = node(b);
    if (std::find(na.children.begin(), na.children.end(), b) != na.children.end())
        throw StructuralError("duplicate set-graph edge " + na.set.to_string() + " -- " +
                              nb.set.to_string());
    na.children.push_back(b);
    nb.children.push_back(a);
    arc_count_ += 2;
}

void SetGraph::remove_undirected_edge(NodeId a, NodeId b) {
    Node& na = node(a);
    Node& nb = node(b);
    if (!erase_value(na.children, b) || !erase_value(nb.children, a))
        throw StructuralError("set-graph edge to remove is absent");
    arc_count_ -= 2;
}

const std::vector<SetGraph::NodeId>& SetGraph::children(NodeId id) const {
    return node(id).children;
}

const std::vector<SetGraph::NodeId>& SetGraph::parents(NodeId id) const {
    return node(id).parents;
}

int SetGraph::degree(NodeId id) const {
    const Node& n = node(id);
    return static_cast<int>(n.children.size() + n.parents.size());
}

std::vector<SetGraph::NodeId> SetGraph::node_ids() const {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(alive_count_));
    for (NodeId id = 0; id < static_cast<NodeId>(nodes_.size()); ++id) {
        if (nodes_[id].alive) out.push_back(id);
    }
    return out;
}

std::vector<VertexSet> SetGraph::vertex_sets() const {
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(alive_count_));
    for (NodeId id : node_ids()) out.push_back(nodes_[id].set);
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<std::pair<VertexSet, VertexSet>> SetGraph::directed_edges() const {
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (NodeId id : node_ids()) {
        for (NodeId c : nodes_[id].children) out.emplace_back(nodes_[id].set, nodes_[c].set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<VertexSet, VertexSet>> SetGraph::undirected_edges() const {
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (NodeId id : node_ids()) {
        for (NodeId c : nodes_[id].children) {
            const VertexSet& a = nodes_[id].set;
            const VertexSet& b = nodes_[c].set;
            if (a < b) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SetGraph::same_structure(const SetGraph& other) const {
    return vertex_sets() == other.vertex_sets() && directed_edges() == other.directed_edges();
}

} // namespace chordal
