#include "chordal/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "chordal/errors.hpp"

namespace chordal::oracle {

namespace {

// Maximum-cardinality search visit order: next vertex is the one with the
// most already-visited neighbours, lowest id on ties. Restarts handle
// disconnected graphs.
std::vector<VertexId> mcs_order(const UndirectedGraph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (best == -1 || weight[v] > weight[best]) best = v;
        }
        visited[best] = true;
        order.push_back(best);
        for (VertexId u : g.neighbours(best)) {
            if (!visited[u]) ++weight[u];
        }
    }
    return order;
}

} // namespace

bool is_decomposable(const UndirectedGraph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    const std::vector<VertexId> visit = mcs_order(g);
    // Elimination order is the reverse of the visit order; it is perfect iff
    // the graph is chordal. For each vertex, its later neighbours minus the
    // earliest of them must all be adjacent to that earliest one.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[visit[i]] = n - 1 - i; // elimination position
    for (VertexId v = 0; v < n; ++v) {
        VertexId pivot = -1;
        for (VertexId u : g.neighbours(v)) {
            if (pos[u] > pos[v] && (pivot == -1 || pos[u] < pos[pivot])) pivot = u;
        }
        if (pivot == -1) continue;
        const VertexSet& pivot_adj = g.neighbours(pivot);
        for (VertexId u : g.neighbours(v)) {
            if (u == pivot || pos[u] <= pos[v]) continue;
            if (!pivot_adj.contains(u)) return false;
        }
    }
    return true;
}

namespace {

void bron_kerbosch(const UndirectedGraph& g, VertexSet r, std::vector<VertexId> p,
                   std::vector<VertexId> x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(std::move(r));
        return;
    }
    VertexId pivot = -1;
    int best = -1;
    for (const auto* side : {&p, &x}) {
        for (VertexId v : *side) {
            int cnt = 0;
            for (VertexId u : p) {
                if (g.has_edge(v, u)) ++cnt;
            }
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
    }
    std::vector<VertexId> candidates;
    for (VertexId v : p) {
        if (!g.has_edge(pivot, v)) candidates.push_back(v);
    }
    for (VertexId v : candidates) {
        std::vector<VertexId> p2, x2;
        for (VertexId u : p) {
            if (g.has_edge(v, u)) p2.push_back(u);
        }
        for (VertexId u : x) {
            if (g.has_edge(v, u)) x2.push_back(u);
        }
        bron_kerbosch(g, r.with(v), std::move(p2), std::move(x2), out);
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

std::vector<VertexSet> enumerate_cliques(const UndirectedGraph& g) {
    std::vector<VertexSet> out;
    std::vector<VertexId> p(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) p[v] = v;
    bron_kerbosch(g, VertexSet{}, std::move(p), {}, out);
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

namespace {

PerfectOrdering perfect_ordering_impl(const UndirectedGraph& g, std::mt19937_64* rng) {
    if (!is_decomposable(g))
        throw StructuralError("perfect ordering requires a decomposable graph");
    std::vector<VertexSet> cliques = enumerate_cliques(g);
    PerfectOrdering po;
    if (cliques.empty()) return po;

    std::vector<bool> used(cliques.size(), false);
    auto pick = [&](const std::vector<std::size_t>& ties) {
        if (rng == nullptr || ties.size() == 1) return ties.front();
        std::uniform_int_distribution<std::size_t> d(0, ties.size() - 1);
        return ties[d(*rng)];
    };

    VertexSet covered;
    for (std::size_t step = 0; step < cliques.size(); ++step) {
        int best_w = -1;
        std::vector<std::size_t> ties;
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            if (used[i]) continue;
            const int w = step == 0 ? 0 : set_intersection(cliques[i], covered).size();
            if (w > best_w) {
                best_w = w;
                ties.clear();
            }
            if (w == best_w) ties.push_back(i);
        }
        const std::size_t chosen = pick(ties);
        used[chosen] = true;
        VertexSet sep = step == 0 ? VertexSet{} : set_intersection(cliques[chosen], covered);
        if (step > 0) {
            bool housed = false;
            for (const VertexSet& earlier : po.cliques) {
                if (sep.is_subset_of(earlier)) {
                    housed = true;
                    break;
                }
            }
            if (!housed)
                throw StructuralError("running intersection property violated");
        }
        covered = set_union(covered, cliques[chosen]);
        po.cliques.push_back(cliques[chosen]);
        po.separators.push_back(std::move(sep));
    }
    return po;
}

} // namespace

PerfectOrdering perfect_ordering(const UndirectedGraph& g) {
    return perfect_ordering_impl(g, nullptr);
}

PerfectOrdering perfect_ordering(const UndirectedGraph& g, std::mt19937_64& rng) {
    return perfect_ordering_impl(g, &rng);
}

SeparatorMultiset separator_multiset(const UndirectedGraph& g) {
    const PerfectOrdering po = perfect_ordering(g);
    SeparatorMultiset out;
    for (std::size_t i = 1; i < po.separators.size(); ++i) out.add(po.separators[i]);
    return out;
}

namespace {

bool connected_over(const SetGraph& sg, const std::vector<SetGraph::NodeId>& members) {
    if (members.size() <= 1) return true;
    std::unordered_set<int> allowed(members.begin(), members.end());
    std::unordered_set<int> seen{members.front()};
    std::deque<int> queue{members.front()};
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        sg.for_each_neighbour(b, [&](int c) {
            if (allowed.count(c) && !seen.count(c)) {
                seen.insert(c);
                queue.push_back(c);
            }
        });
    }
    return seen.size() == members.size();
}

bool junction_holds_for(const SetGraph& sg, const VertexSet& a,
                        const std::vector<SetGraph::NodeId>& ids) {
    std::vector<SetGraph::NodeId> members;
    for (SetGraph::NodeId id : ids) {
        if (a.is_subset_of(sg.set_of(id))) members.push_back(id);
    }
    return connected_over(sg, members);
}

} // namespace

bool check_junction_property(const SetGraph& sg) {
    const std::vector<SetGraph::NodeId> ids = sg.node_ids();
    if (ids.empty()) return true;
    std::unordered_set<VertexSet, VertexSetHash> candidates;
    candidates.insert(VertexSet{});
    for (SetGraph::NodeId id : ids) {
        for (VertexId v : sg.set_of(id)) candidates.insert(VertexSet::single(v));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            candidates.insert(set_intersection(sg.set_of(ids[i]), sg.set_of(ids[j])));
        }
    }
    for (const VertexSet& a : candidates) {
        if (!junction_holds_for(sg, a, ids)) return false;
    }
    return true;
}

bool check_junction_property_exhaustive(const SetGraph& sg, int n) {
    if (n > 20) throw StructuralError("exhaustive junction check limited to n <= 20");
    const std::vector<SetGraph::NodeId> ids = sg.node_ids();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet a;
        for (int v = 0; v < n; ++v) {
            if (mask & (1ull << v)) a.insert(v);
        }
        if (!junction_holds_for(sg, a, ids)) return false;
    }
    return true;
}

SetGraph rebuild_ibarra(const UndirectedGraph& g) {
    const std::vector<VertexSet> cliques = enumerate_cliques(g);
    const SeparatorMultiset seps = separator_multiset(g);

    SetGraph ig;
    std::vector<VertexSet> sep_sets;
    for (const auto& [s, mult] : seps.sorted()) sep_sets.push_back(s);
    for (const VertexSet& s : sep_sets) ig.add_vertex(s);
    for (const VertexSet& c : cliques) ig.add_vertex(c);

    const std::vector<SetGraph::NodeId> ids = ig.node_ids();
    for (const VertexSet& s : sep_sets) {
        const SetGraph::NodeId sid = ig.find(s);
        for (SetGraph::NodeId tid : ids) {
            if (tid == sid) continue;
            const VertexSet& t = ig.set_of(tid);
            if (!s.is_proper_subset_of(t)) continue;
            bool blocked = false;
            for (const VertexSet& u : sep_sets) {
                if (s.is_proper_subset_of(u) && u.is_proper_subset_of(t)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) ig.add_directed_edge(sid, tid);
        }
    }
    return ig;
}

bool legality_oracle(const UndirectedGraph& g, VertexId x, VertexId y) {
    UndirectedGraph h = g;
    if (h.has_edge(x, y)) {
        h.remove_edge(x, y);
    } else {
        h.add_edge(x, y);
    }
    return is_decomposable(h);
}

} // namespace chordal::oracle
