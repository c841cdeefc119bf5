#include "chordal/junction_tree.hpp"

#include <algorithm>

#include "chordal/errors.hpp"
#include "chordal/search.hpp"
#include "rep_internal.hpp"

namespace chordal {

JunctionTree::JunctionTree(int vertex_count) : n_(vertex_count), edge_mirror_(vertex_count) {
    if (vertex_count < 1) throw StructuralError("vertex universe must be non-empty");
    vmap_.resize(static_cast<std::size_t>(vertex_count));
    SetGraph::NodeId first = SetGraph::kNoNode;
    for (VertexId v = 0; v < vertex_count; ++v) {
        const SetGraph::NodeId id = tree_.add_vertex(VertexSet::single(v));
        vmap_[v] = id;
        if (v == 0) {
            first = id;
        } else {
            tree_.add_undirected_edge(first, id);
        }
    }
}

SxyResult JunctionTree::find_sxy(VertexId x, VertexId y) const {
    const SetGraph::NodeId cx0 = vmap_[x];
    auto path = find_path(
        cx0, [&](int v, auto&& f) { tree_.for_each_neighbour(v, f); },
        SearchDiscipline::kFifo, [](int) { return true; },
        [&](int v) { return tree_.set_of(v).contains(y); });
    if (!path) throw StructuralError("junction tree is disconnected");
    const SetGraph::NodeId cy = path->back();

    if (tree_.set_of(cy).contains(x)) {
        // Connected: S_xy is the union of the induced subtree of cliques
        // containing both endpoints, minus the endpoints.
        VertexSet acc;
        for_each_reachable(
            cy, [&](int v, auto&& f) { tree_.for_each_neighbour(v, f); },
            [&](int v) {
                const VertexSet& s = tree_.set_of(v);
                return s.contains(x) && s.contains(y);
            },
            [&](int v) { acc = set_union(acc, tree_.set_of(v)); });
        acc.erase(x);
        acc.erase(y);
        return {std::move(acc), true};
    }
    // Not connected: back off C_x to the clique nearest C_y that still
    // contains x, then intersect.
    SetGraph::NodeId cx = cx0;
    for (std::size_t i = path->size(); i-- > 0;) {
        if (tree_.set_of((*path)[i]).contains(x)) {
            cx = (*path)[i];
            break;
        }
    }
    return {set_intersection(tree_.set_of(cx), tree_.set_of(cy)), false};
}

MoveReport JunctionTree::disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) {
    if (!edge_mirror_.has_edge(x, y))
        throw ContractViolation("disconnect_if_enabled: (x,y) is not an edge");
    if (!cxy.contains(x) || !cxy.contains(y))
        throw ContractViolation("disconnect_if_enabled: enabler must contain both endpoints");

    MoveReport report{false, MoveKind::kDisconnect, cxy};
    const SetGraph::NodeId id_cxy = tree_.find(cxy);
    if (id_cxy == SetGraph::kNoNode) return report;

    const VertexSet sxy = cxy.without(x).without(y);
    const VertexSet sx = sxy.with(x);
    const VertexSet sy = sxy.with(y);

    // Resolve each side to an existing neighbour covering it, detached from
    // C_xy, or to a fresh vertex.
    auto resolve_side = [&](const VertexSet& side) {
        for (SetGraph::NodeId nbr : tree_.children(id_cxy)) {
            if (side.is_subset_of(tree_.set_of(nbr))) {
                tree_.remove_undirected_edge(id_cxy, nbr);
                return nbr;
            }
        }
        return tree_.add_vertex(side);
    };
    const SetGraph::NodeId cx = resolve_side(sx);
    const SetGraph::NodeId cy = resolve_side(sy);

    // Re-home the remaining neighbours by x-membership.
    const std::vector<SetGraph::NodeId> rest = tree_.children(id_cxy);
    for (SetGraph::NodeId nbr : rest) {
        tree_.remove_undirected_edge(id_cxy, nbr);
        tree_.add_undirected_edge(nbr, tree_.set_of(nbr).contains(x) ? cx : cy);
    }
    tree_.remove_vertex(id_cxy);
    tree_.add_undirected_edge(cx, cy);

    for (VertexId v : tree_.set_of(cx)) vmap_[v] = cx;
    for (VertexId v : tree_.set_of(cy)) vmap_[v] = cy;

    edge_mirror_.remove_edge(x, y);
    report.applied = true;
    return report;
}

MoveReport JunctionTree::connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) {
    if (edge_mirror_.has_edge(x, y))
        throw ContractViolation("connect_if_enabled: (x,y) is an edge");
    if (sxy.contains(x) || sxy.contains(y))
        throw ContractViolation("connect_if_enabled: enabler must not contain the endpoints");

    MoveReport report{false, MoveKind::kConnect, sxy};

    // Shortest clique path from a clique holding x to the first clique
    // holding y.
    auto path_opt = find_path(
        vmap_[x], [&](int v, auto&& f) { tree_.for_each_neighbour(v, f); },
        SearchDiscipline::kFifo, [](int) { return true; },
        [&](int v) { return tree_.set_of(v).contains(y); });
    if (!path_opt) throw StructuralError("junction tree is disconnected");
    std::vector<int> path = std::move(*path_opt);
    if (tree_.set_of(path.back()).contains(x))
        throw ContractViolation("connect_if_enabled: (x,y) is an edge of the represented graph");

    std::size_t start = 0;
    for (std::size_t i = path.size(); i-- > 0;) {
        if (tree_.set_of(path[i]).contains(x)) {
            start = i;
            break;
        }
    }

    // An edge of weight |S_xy| on the path carries exactly S_xy (junction
    // property), and its existence is the legality condition.
    std::size_t cut = path.size();
    for (std::size_t i = start; i + 1 < path.size(); ++i) {
        const VertexSet sep =
            set_intersection(tree_.set_of(path[i]), tree_.set_of(path[i + 1]));
        if (sep.size() == sxy.size()) {
            if (sep != sxy)
                throw StructuralError("path separator of matching size differs from S_xy");
            cut = i;
            break;
        }
    }
    if (cut == path.size()) return report;

    const SetGraph::NodeId cx = path[start];
    const SetGraph::NodeId cy = path.back();
    tree_.remove_undirected_edge(path[cut], path[cut + 1]);

    const VertexSet cxy = sxy.with(x).with(y);
    const SetGraph::NodeId id_cxy = tree_.add_vertex(cxy);

    // A strictly smaller endpoint is contained in C_xy and gets absorbed.
    auto attach_or_absorb = [&](SetGraph::NodeId c) {
        if (tree_.set_of(c).size() < cxy.size()) {
            const std::vector<SetGraph::NodeId> nbrs = tree_.children(c);
            for (SetGraph::NodeId nbr : nbrs) {
                tree_.remove_undirected_edge(c, nbr);
                tree_.add_undirected_edge(nbr, id_cxy);
            }
            tree_.remove_vertex(c);
        } else {
            tree_.add_undirected_edge(c, id_cxy);
        }
    };
    attach_or_absorb(cx);
    attach_or_absorb(cy);

    for (VertexId v : cxy) vmap_[v] = id_cxy;

    edge_mirror_.add_edge(x, y);
    report.applied = true;
    return report;
}

UndirectedGraph JunctionTree::export_graph() const {
    return detail::graph_from_cliques(tree_, n_, /*childless_only=*/false);
}

} // namespace chordal
