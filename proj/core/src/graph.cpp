#include "chordal/graph.hpp"

#include <string>

#include "chordal/errors.hpp"
#include "chordal/search.hpp"

namespace chordal {

UndirectedGraph::UndirectedGraph(int vertex_count) {
    if (vertex_count < 0) throw StructuralError("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

void UndirectedGraph::check_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw StructuralError("unknown vertex " + std::to_string(v));
}

bool UndirectedGraph::has_edge(VertexId x, VertexId y) const {
    check_vertex(x);
    check_vertex(y);
    return adj_[static_cast<std::size_t>(x)].contains(y);
}

void UndirectedGraph::add_edge(VertexId x, VertexId y) {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw StructuralError("self loop rejected on vertex " + std::to_string(x));
    if (has_edge(x, y)) return;
    adj_[static_cast<std::size_t>(x)].insert(y);
    adj_[static_cast<std::size_t>(y)].insert(x);
    ++edge_count_;
}

void UndirectedGraph::remove_edge(VertexId x, VertexId y) {
    if (!has_edge(x, y))
        throw StructuralError("edge (" + std::to_string(x) + "," + std::to_string(y) +
                              ") is not present");
    adj_[static_cast<std::size_t>(x)].erase(y);
    adj_[static_cast<std::size_t>(y)].erase(x);
    --edge_count_;
}

const VertexSet& UndirectedGraph::neighbours(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet UndirectedGraph::common_neighbours(VertexId x, VertexId y) const {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw StructuralError("common_neighbours requires distinct vertices");
    return set_intersection(adj_[static_cast<std::size_t>(x)],
                            adj_[static_cast<std::size_t>(y)]);
}

bool UndirectedGraph::is_complete(const VertexSet& u) const {
    const auto& ids = u.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        check_vertex(ids[i]);
        const VertexSet& ni = adj_[static_cast<std::size_t>(ids[i])];
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (!ni.contains(ids[j])) return false;
        }
    }
    return true;
}

std::vector<std::pair<VertexId, VertexId>> UndirectedGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId x = 0; x < order(); ++x) {
        for (VertexId y : adj_[static_cast<std::size_t>(x)]) {
            if (x < y) out.emplace_back(x, y);
        }
    }
    return out;
}

bool separates(const UndirectedGraph& g, const VertexSet& blocker, VertexId x, VertexId y) {
    if (blocker.contains(x) || blocker.contains(y))
        throw StructuralError("separates requires x and y outside the blocking set");
    auto path = find_path(
        x, [&](int v, auto&& f) { for (VertexId u : g.neighbours(v)) f(u); },
        SearchDiscipline::kFifo, [&](int v) { return !blocker.contains(v); },
        [&](int v) { return v == y; });
    return !path.has_value();
}

} // namespace chordal
