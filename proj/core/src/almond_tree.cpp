#include "chordal/almond_tree.hpp"

#include <algorithm>

#include "chordal/errors.hpp"
#include "chordal/search.hpp"
#include "rep_internal.hpp"

namespace chordal {

AlmondTree::AlmondTree(int vertex_count) : n_(vertex_count), edge_mirror_(vertex_count) {
    if (vertex_count < 1) throw StructuralError("vertex universe must be non-empty");
    vmap_.resize(static_cast<std::size_t>(vertex_count));
    if (vertex_count == 1) {
        vmap_[0] = tree_.add_vertex(VertexSet::single(0));
        return;
    }
    const SetGraph::NodeId root = tree_.add_vertex(VertexSet{});
    for (VertexId v = 0; v < vertex_count; ++v) {
        const SetGraph::NodeId id = tree_.add_vertex(VertexSet::single(v));
        vmap_[v] = id;
        tree_.add_directed_edge(root, id);
    }
}

SxyResult AlmondTree::find_sxy(VertexId x, VertexId y) const {
    const SetGraph::NodeId start = vmap_[x];
    auto path = find_path(
        start, [&](int v, auto&& f) { tree_.for_each_neighbour(v, f); },
        SearchDiscipline::kFifo, [](int) { return true; },
        [&](int v) { return tree_.set_of(v).contains(y); });
    if (!path) throw StructuralError("almond tree is disconnected");
    const SetGraph::NodeId cy = path->back();

    if (tree_.set_of(cy).contains(x)) {
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
    SetGraph::NodeId cx = start;
    for (std::size_t i = path->size(); i-- > 0;) {
        if (tree_.set_of((*path)[i]).contains(x)) {
            cx = (*path)[i];
            break;
        }
    }
    return {set_intersection(tree_.set_of(cx), tree_.set_of(cy)), false};
}

bool AlmondTree::collapse_if_redundant(SetGraph::NodeId id) {
    if (tree_.children(id).size() != 1) return false;
    const SetGraph::NodeId child = tree_.children(id).front();
    const std::vector<SetGraph::NodeId> ps = tree_.parents(id);
    for (SetGraph::NodeId p : ps) {
        tree_.remove_directed_edge(p, id);
        detail::connect_subset_edge(tree_, p, child);
    }
    tree_.remove_directed_edge(id, child);
    tree_.remove_vertex(id);
    return true;
}

bool AlmondTree::remove_redundant_separator(const VertexSet& s) {
    const SetGraph::NodeId id = tree_.find(s);
    if (id == SetGraph::kNoNode)
        throw StructuralError("remove_redundant_separator: not a vertex of the tree");
    return collapse_if_redundant(id);
}

MoveReport AlmondTree::disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) {
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

    // Detach S_xy from the tree path towards C_xy; the slot is re-used when
    // S_xy picks up its new instance below.
    SetGraph::NodeId id_sxy = tree_.find(sxy);
    if (id_sxy != SetGraph::kNoNode) {
        const std::vector<int> path = detail::tree_path(tree_, id_cxy, id_sxy);
        tree_.remove_edge_between(path[path.size() - 2], id_sxy);
    }

    // Resolve the vertex inheriting each side of C_xy.
    auto resolve_side = [&](const VertexSet& side) {
        const SetGraph::NodeId id_s = tree_.find(side);
        if (id_s == SetGraph::kNoNode) return tree_.add_vertex(side);
        // An existing S_x is connected to C_xy; cut that edge and collapse
        // when it became redundant.
        tree_.remove_edge_between(id_s, id_cxy);
        if (tree_.children(id_s).size() == 1) {
            const SetGraph::NodeId child = tree_.children(id_s).front();
            collapse_if_redundant(id_s);
            return child;
        }
        return id_s;
    };
    const SetGraph::NodeId cx = resolve_side(sx);
    const SetGraph::NodeId cy = resolve_side(sy);

    // Re-home the remaining separator neighbours of C_xy by x-membership.
    const std::vector<SetGraph::NodeId> rest = tree_.parents(id_cxy);
    for (SetGraph::NodeId nbr : rest) {
        tree_.remove_directed_edge(nbr, id_cxy);
        detail::connect_subset_edge(tree_, nbr, tree_.set_of(nbr).contains(x) ? cx : cy);
    }
    tree_.remove_vertex(id_cxy);

    id_sxy = tree_.find(sxy);
    if (id_sxy == SetGraph::kNoNode) id_sxy = tree_.add_vertex(sxy);
    detail::connect_subset_edge(tree_, id_sxy, cx);
    detail::connect_subset_edge(tree_, id_sxy, cy);

    for (VertexId v : tree_.set_of(cx)) vmap_[v] = detail::resolve_clique(tree_, cx);
    for (VertexId v : tree_.set_of(cy)) vmap_[v] = detail::resolve_clique(tree_, cy);

    edge_mirror_.remove_edge(x, y);
    report.applied = true;
    return report;
}

MoveReport AlmondTree::connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) {
    if (edge_mirror_.has_edge(x, y))
        throw ContractViolation("connect_if_enabled: (x,y) is an edge");
    if (sxy.contains(x) || sxy.contains(y))
        throw ContractViolation("connect_if_enabled: enabler must not contain the endpoints");

    MoveReport report{false, MoveKind::kConnect, sxy};
    const SetGraph::NodeId id_sxy = tree_.find(sxy);
    if (id_sxy == SetGraph::kNoNode) return report;

    // Walk each endpoint's clique to S_xy; the penultimate vertices tell
    // whether S_xy actually separates x from y.
    const std::vector<int> path_x = detail::tree_path(tree_, vmap_[x], id_sxy);
    const std::vector<int> path_y = detail::tree_path(tree_, vmap_[y], id_sxy);
    const SetGraph::NodeId px = path_x[path_x.size() - 2];
    const SetGraph::NodeId py = path_y[path_y.size() - 2];
    if (px == py) return report; // same side: S_xy does not separate

    auto last_containing = [&](const std::vector<int>& path, VertexId v) {
        SetGraph::NodeId hit = path.front();
        for (int id : path) {
            if (tree_.set_of(id).contains(v)) hit = id;
        }
        return hit;
    };
    const SetGraph::NodeId cx = last_containing(path_x, x);
    const SetGraph::NodeId cy = last_containing(path_y, y);

    tree_.remove_edge_between(id_sxy, px);
    tree_.remove_edge_between(id_sxy, py);

    const VertexSet cxy = sxy.with(x).with(y);
    const SetGraph::NodeId id_cxy = tree_.add_vertex(cxy);

    auto wire_side = [&](const VertexSet& side, SetGraph::NodeId c_side) {
        SetGraph::NodeId id_s = tree_.find(side);
        if (id_s != SetGraph::kNoNode) {
            detail::connect_subset_edge(tree_, id_s, id_cxy);
            collapse_if_redundant(id_s);
        } else {
            id_s = tree_.add_vertex(side);
            detail::connect_subset_edge(tree_, id_s, id_cxy);
            detail::connect_subset_edge(tree_, id_s, c_side);
        }
    };
    wire_side(sxy.with(x), cx);
    wire_side(sxy.with(y), cy);

    detail::connect_subset_edge(tree_, id_sxy, id_cxy);
    collapse_if_redundant(id_sxy);

    for (VertexId v : cxy) vmap_[v] = id_cxy;

    edge_mirror_.add_edge(x, y);
    report.applied = true;
    return report;
}

UndirectedGraph AlmondTree::export_graph() const {
    return detail::graph_from_cliques(tree_, n_, /*childless_only=*/true);
}

} // namespace chordal
