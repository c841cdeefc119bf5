#include "chordal/ibarra_graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "chordal/errors.hpp"
#include "chordal/search.hpp"
#include "rep_internal.hpp"

namespace chordal {

IbarraGraph::IbarraGraph(int vertex_count) : n_(vertex_count), edge_mirror_(vertex_count) {
    if (vertex_count < 1) throw StructuralError("vertex universe must be non-empty");
    vmap_.resize(static_cast<std::size_t>(vertex_count));
    if (vertex_count == 1) {
        vmap_[0] = dag_.add_vertex(VertexSet::single(0));
        return;
    }
    const SetGraph::NodeId root = dag_.add_vertex(VertexSet{});
    for (VertexId v = 0; v < vertex_count; ++v) {
        const SetGraph::NodeId id = dag_.add_vertex(VertexSet::single(v));
        vmap_[v] = id;
        dag_.add_directed_edge(root, id);
    }
}

std::vector<SetGraph::NodeId> IbarraGraph::ancestors(SetGraph::NodeId id) const {
    std::vector<SetGraph::NodeId> out;
    std::unordered_set<int> seen{id};
    std::deque<int> queue{id};
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        for (SetGraph::NodeId p : dag_.parents(b)) {
            if (seen.insert(p).second) {
                out.push_back(p);
                queue.push_back(p);
            }
        }
    }
    return out;
}

std::vector<SetGraph::NodeId> IbarraGraph::descendants(SetGraph::NodeId id) const {
    std::vector<SetGraph::NodeId> out;
    std::unordered_set<int> seen{id};
    std::deque<int> queue{id};
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        for (SetGraph::NodeId c : dag_.children(b)) {
            if (seen.insert(c).second) {
                out.push_back(c);
                queue.push_back(c);
            }
        }
    }
    return out;
}

bool IbarraGraph::is_ancestor(SetGraph::NodeId a, SetGraph::NodeId b) const {
    // Follow parent edges up from b until a shows up or the subsets run out.
    std::unordered_set<int> seen{b};
    std::deque<int> queue{b};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (SetGraph::NodeId p : dag_.parents(cur)) {
            if (p == a) return true;
            if (seen.insert(p).second) queue.push_back(p);
        }
    }
    return false;
}

SetGraph::NodeId IbarraGraph::add_above_node(const VertexSet& x, SetGraph::NodeId cid) {
    if (dag_.has_vertex(x)) return dag_.find(x); // already present: nothing to do
    if (!x.is_proper_subset_of(dag_.set_of(cid)))
        throw ContractViolation("add_above: X must sit strictly inside the known superset");

    // Parents: the maximal subsets of X among the ancestors of C, scanned
    // largest to smallest so covered branches drop out wholesale.
    std::vector<SetGraph::NodeId> anc = ancestors(cid);
    std::sort(anc.begin(), anc.end(), [&](SetGraph::NodeId a, SetGraph::NodeId b) {
        return size_lex_less(dag_.set_of(b), dag_.set_of(a));
    });
    const SetGraph::NodeId xid = dag_.add_vertex(x);
    std::unordered_set<int> dropped;
    for (SetGraph::NodeId a : anc) {
        if (dropped.count(a)) continue;
        if (dag_.set_of(a).is_proper_subset_of(x)) {
            detail::connect_subset_edge(dag_, a, xid);
            for (SetGraph::NodeId up : ancestors(a)) dropped.insert(up);
        }
        dropped.insert(a);
    }

    // Children: the minimal supersets of X. The junction property keeps the
    // supersets of X in one connected patch around C, so the walk stays
    // local.
    std::vector<SetGraph::NodeId> sup;
    for_each_reachable(
        cid, [&](int v, auto&& f) { dag_.for_each_neighbour(v, f); },
        [&](int v) { return v != xid && x.is_subset_of(dag_.set_of(v)); },
        [&](int v) { sup.push_back(v); });
    std::sort(sup.begin(), sup.end(), [&](SetGraph::NodeId a, SetGraph::NodeId b) {
        return size_lex_less(dag_.set_of(a), dag_.set_of(b));
    });
    dropped.clear();
    for (SetGraph::NodeId a : sup) {
        if (dropped.count(a)) continue;
        detail::connect_subset_edge(dag_, xid, a);
        for (SetGraph::NodeId down : descendants(a)) dropped.insert(down);
        dropped.insert(a);
    }

    // X now interposes between its parents and children; drop shortcuts.
    const std::vector<SetGraph::NodeId> ps = dag_.parents(xid);
    const std::vector<SetGraph::NodeId> cs = dag_.children(xid);
    for (SetGraph::NodeId p : ps) {
        for (SetGraph::NodeId c : cs) {
            if (dag_.has_directed_edge(p, c)) dag_.remove_directed_edge(p, c);
        }
    }
    return xid;
}

void IbarraGraph::add_above(const VertexSet& x, const VertexSet& c) {
    const SetGraph::NodeId cid = dag_.find(c);
    if (cid == SetGraph::kNoNode)
        throw ContractViolation("add_above: the superset is not a vertex");
    add_above_node(x, cid);
}

bool IbarraGraph::is_redundant(SetGraph::NodeId id) const {
    const std::vector<SetGraph::NodeId> desc = descendants(id);
    if (desc.empty()) return false; // childless: a clique, not a separator
    std::unordered_set<int> members(desc.begin(), desc.end());
    std::unordered_set<int> seen{desc.front()};
    std::deque<int> queue{desc.front()};
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        dag_.for_each_neighbour(b, [&](int c) {
            if (members.count(c) && !seen.count(c)) {
                seen.insert(c);
                queue.push_back(c);
            }
        });
    }
    return seen.size() == desc.size();
}

SetGraph::NodeId IbarraGraph::collapse_redundant(SetGraph::NodeId id) {
    std::vector<SetGraph::NodeId> ps = dag_.parents(id);
    std::vector<SetGraph::NodeId> cs = dag_.children(id);
    auto by_set = [&](SetGraph::NodeId a, SetGraph::NodeId b) {
        return size_lex_less(dag_.set_of(a), dag_.set_of(b));
    };
    std::sort(ps.begin(), ps.end(), by_set);
    std::sort(cs.begin(), cs.end(), by_set);
    const SetGraph::NodeId stand_in = cs.front();
    dag_.remove_vertex(id);
    for (SetGraph::NodeId p : ps) {
        for (SetGraph::NodeId c : cs) {
            if (!is_ancestor(p, c)) detail::connect_subset_edge(dag_, p, c);
        }
    }
    return stand_in;
}

bool IbarraGraph::remove_redundant_separator(const VertexSet& s) {
    const SetGraph::NodeId id = dag_.find(s);
    if (id == SetGraph::kNoNode)
        throw StructuralError("remove_redundant_separator: not a vertex of the graph");
    if (!is_redundant(id)) return false;
    collapse_redundant(id);
    return true;
}

SxyResult IbarraGraph::find_sxy(VertexId x, VertexId y) const {
    const SetGraph::NodeId start = vmap_[x];
    auto weight = [&](int v) { return dag_.set_of(v).size(); };
    auto path = find_path(
        start, [&](int v, auto&& f) { dag_.for_each_neighbour(v, f); },
        SearchDiscipline::kHeaviestFirst, [](int) { return true; },
        [&](int v) { return dag_.set_of(v).contains(y); }, weight);
    if (!path) throw StructuralError("ibarra graph is disconnected");
    const SetGraph::NodeId cy = path->back();

    if (dag_.set_of(cy).contains(x)) {
        VertexSet acc;
        for_each_reachable(
            cy, [&](int v, auto&& f) { dag_.for_each_neighbour(v, f); },
            [&](int v) {
                const VertexSet& s = dag_.set_of(v);
                return s.contains(x) && s.contains(y);
            },
            [&](int v) { acc = set_union(acc, dag_.set_of(v)); });
        acc.erase(x);
        acc.erase(y);
        return {std::move(acc), true};
    }
    SetGraph::NodeId cx = start;
    for (std::size_t i = path->size(); i-- > 0;) {
        if (dag_.set_of((*path)[i]).contains(x)) {
            cx = (*path)[i];
            break;
        }
    }
    return {set_intersection(dag_.set_of(cx), dag_.set_of(cy)), false};
}

MoveReport IbarraGraph::disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) {
    if (!edge_mirror_.has_edge(x, y))
        throw ContractViolation("disconnect_if_enabled: (x,y) is not an edge");
    if (!cxy.contains(x) || !cxy.contains(y))
        throw ContractViolation("disconnect_if_enabled: enabler must contain both endpoints");

    MoveReport report{false, MoveKind::kDisconnect, cxy};
    SetGraph::NodeId id_cxy = dag_.find(cxy);
    if (id_cxy == SetGraph::kNoNode) return report;

    const VertexSet sxy = cxy.without(x).without(y);
    const VertexSet sx = sxy.with(x);
    const VertexSet sy = sxy.with(y);

    // S_xy gains an instance; S_x and S_y become the new covering sets.
    // Insertion order matters: S_xy first so the later two pick it up as a
    // parent.
    add_above_node(sxy, id_cxy);
    SetGraph::NodeId id_sx = add_above_node(sx, id_cxy);
    SetGraph::NodeId id_sy = add_above_node(sy, id_cxy);

    dag_.remove_vertex(id_cxy);

    if (is_redundant(id_sx)) id_sx = collapse_redundant(id_sx);
    if (is_redundant(id_sy)) id_sy = collapse_redundant(id_sy);

    for (VertexId v : dag_.set_of(id_sx)) vmap_[v] = detail::resolve_clique(dag_, id_sx);
    for (VertexId v : dag_.set_of(id_sy)) vmap_[v] = detail::resolve_clique(dag_, id_sy);

    edge_mirror_.remove_edge(x, y);
    report.applied = true;
    return report;
}

MoveReport IbarraGraph::connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) {
    if (edge_mirror_.has_edge(x, y))
        throw ContractViolation("connect_if_enabled: (x,y) is an edge");
    if (sxy.contains(x) || sxy.contains(y))
        throw ContractViolation("connect_if_enabled: enabler must not contain the endpoints");

    MoveReport report{false, MoveKind::kConnect, sxy};
    const SetGraph::NodeId id_sxy = dag_.find(sxy);
    if (id_sxy == SetGraph::kNoNode) return report;

    // Heaviest-first search from a clique holding y to the first set holding
    // x, edges followed in both directions; S_xy must lie on the trimmed
    // path for the connection to be legal.
    auto weight = [&](int v) { return dag_.set_of(v).size(); };
    auto path_opt = find_path(
        vmap_[y], [&](int v, auto&& f) { dag_.for_each_neighbour(v, f); },
        SearchDiscipline::kHeaviestFirst, [](int) { return true; },
        [&](int v) { return dag_.set_of(v).contains(x); }, weight);
    if (!path_opt) throw StructuralError("ibarra graph is disconnected");
    const std::vector<int>& path = *path_opt;
    if (dag_.set_of(path.back()).contains(y))
        throw ContractViolation("connect_if_enabled: (x,y) is an edge of the represented graph");

    const SetGraph::NodeId cx = path.back();
    // Backtracking from C_x, the first set holding y trims the path.
    std::size_t first_y = 0;
    for (std::size_t i = path.size(); i-- > 0;) {
        if (dag_.set_of(path[i]).contains(y)) {
            first_y = i;
            break;
        }
    }
    const SetGraph::NodeId cy = path[first_y];
    bool on_path = false;
    for (std::size_t i = first_y; i < path.size(); ++i) {
        if (path[i] == id_sxy) {
            on_path = true;
            break;
        }
    }
    if (!on_path) return report; // S_xy does not separate x from y

    const VertexSet sx = sxy.with(x);
    const VertexSet sy = sxy.with(y);
    const SetGraph::NodeId id_sx = add_above_node(sx, cx);
    const SetGraph::NodeId id_sy = add_above_node(sy, cy);

    const VertexSet cxy = sxy.with(x).with(y);
    const SetGraph::NodeId id_cxy = dag_.add_vertex(cxy);
    detail::connect_subset_edge(dag_, id_sx, id_cxy);
    detail::connect_subset_edge(dag_, id_sy, id_cxy);

    for (const VertexSet* s : {&sx, &sy, &sxy}) {
        // re-find: an earlier collapse may have removed the set already
        const SetGraph::NodeId id = dag_.find(*s);
        if (id != SetGraph::kNoNode && is_redundant(id)) collapse_redundant(id);
    }

    for (VertexId v : cxy) vmap_[v] = id_cxy;

    edge_mirror_.add_edge(x, y);
    report.applied = true;
    return report;
}

UndirectedGraph IbarraGraph::export_graph() const {
    return detail::graph_from_cliques(dag_, n_, /*childless_only=*/true);
}

} // namespace chordal
