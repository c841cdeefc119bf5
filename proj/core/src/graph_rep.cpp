#include "chordal/graph_rep.hpp"

#include "chordal/errors.hpp"
#include "chordal/search.hpp"

namespace chordal {

GraphState::GraphState(int vertex_count, PotentialModel model, bool restricted_search)
    : g_(vertex_count), model_(std::move(model)), restricted_search_(restricted_search) {
    if (vertex_count < 1) throw StructuralError("vertex universe must be non-empty");
    const double lp_empty = model_.log_phi(VertexSet{});
    log_pi_ = -(vertex_count - 1) * lp_empty;
    for (VertexId v = 0; v < vertex_count; ++v) {
        VertexSet single = VertexSet::single(v);
        log_pi_ += model_.log_phi(single);
        cliques_.insert(std::move(single));
    }
    if (vertex_count > 1) separators_.add(VertexSet{}, vertex_count - 1);
}

SxyResult GraphState::find_sxy(VertexId x, VertexId y) const {
    return {g_.common_neighbours(x, y), g_.has_edge(x, y)};
}

bool GraphState::legality_disconnect(VertexId x, VertexId y) const {
    // C_xy in the clique set is equivalent to S_xy being complete, and is a
    // single hash lookup.
    VertexSet cxy = g_.common_neighbours(x, y);
    cxy.insert(x);
    cxy.insert(y);
    return cliques_.count(cxy) > 0;
}

bool GraphState::connect_separation_test(const VertexSet& sxy, VertexId x, VertexId y) const {
    if (restricted_search_) return restricted_separates(sxy, x, y);
    return separates(g_, sxy, x, y);
}

bool GraphState::legality_connect(VertexId x, VertexId y) const {
    VertexSet sxy = g_.common_neighbours(x, y);
    // The multiset membership pre-check avoids a graph search whenever S_xy
    // is not even a separator of G.
    if (!separators_.contains(sxy)) return false;
    return connect_separation_test(sxy, x, y);
}

bool GraphState::restricted_separates(const VertexSet& sxy, VertexId x, VertexId y) const {
    if (sxy.empty()) return separates(g_, sxy, x, y); // N_xy would be everything
    // N_xy: vertices adjacent to every member of S_xy. Members of S_xy fall
    // out automatically since no vertex is adjacent to itself.
    VertexSet n_xy = g_.neighbours(*sxy.begin());
    for (auto it = std::next(sxy.begin()); it != sxy.end(); ++it)
        n_xy = set_intersection(n_xy, g_.neighbours(*it));
    auto path = find_path(
        x, [&](int v, auto&& f) { for (VertexId u : g_.neighbours(v)) f(u); },
        SearchDiscipline::kFifo, [&](int v) { return n_xy.contains(v); },
        [&](int v) { return v == y; });
    return !path.has_value();
}

MoveReport GraphState::disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) {
    if (!g_.has_edge(x, y))
        throw ContractViolation("disconnect_if_enabled: (x,y) is not an edge");
    VertexSet expected = g_.common_neighbours(x, y);
    expected.insert(x);
    expected.insert(y);
    if (cxy != expected)
        throw ContractViolation("disconnect_if_enabled: enabler is not C_xy for this pair");
    MoveReport report{false, MoveKind::kDisconnect, cxy};
    if (cliques_.count(cxy) == 0) return report;
    apply_disconnect(x, y);
    report.applied = true;
    return report;
}

MoveReport GraphState::connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) {
    if (g_.has_edge(x, y))
        throw ContractViolation("connect_if_enabled: (x,y) is an edge");
    if (sxy != g_.common_neighbours(x, y))
        throw ContractViolation("connect_if_enabled: enabler is not S_xy for this pair");
    MoveReport report{false, MoveKind::kConnect, sxy};
    if (!separators_.contains(sxy)) return report;
    if (!connect_separation_test(sxy, x, y)) return report;
    apply_connect(x, y);
    report.applied = true;
    return report;
}

void GraphState::apply_disconnect(VertexId x, VertexId y) {
    const VertexSet sxy = g_.common_neighbours(x, y);
    const VertexSet sx = sxy.with(x);
    const VertexSet sy = sxy.with(y);
    const VertexSet cxy = sx.with(y);
    if (cliques_.count(cxy) == 0)
        throw ContractViolation("apply_disconnect: move is not legal");

    g_.remove_edge(x, y);
    cliques_.erase(cxy);
    separators_.add(sxy);
    for (const VertexSet* s : {&sx, &sy}) {
        if (!separators_.remove_one(*s)) cliques_.insert(*s);
    }
    log_pi_ += model_.log_phi(sx) + model_.log_phi(sy) - model_.log_phi(cxy) -
               model_.log_phi(sxy);
}

void GraphState::apply_connect(VertexId x, VertexId y) {
    const VertexSet sxy = g_.common_neighbours(x, y);
    const VertexSet sx = sxy.with(x);
    const VertexSet sy = sxy.with(y);
    const VertexSet cxy = sx.with(y);
    if (!separators_.contains(sxy) || !connect_separation_test(sxy, x, y))
        throw ContractViolation("apply_connect: move is not legal");

    g_.add_edge(x, y);
    cliques_.insert(cxy);
    separators_.remove_one(sxy);
    for (const VertexSet* s : {&sx, &sy}) {
        if (cliques_.count(*s) > 0) {
            cliques_.erase(*s);
        } else {
            separators_.add(*s);
        }
    }
    log_pi_ += model_.log_phi(cxy) + model_.log_phi(sxy) - model_.log_phi(sx) -
               model_.log_phi(sy);
}

} // namespace chordal
