#pragma once

#include <unordered_set>

#include "chordal/graph.hpp"
#include "chordal/potentials.hpp"
#include "chordal/representation.hpp"

namespace chordal {

/// Graph-only backend: the decomposable graph with its clique set, separator
/// multiset and log pi tracked incrementally. Legality of a disconnection is
/// the C_xy-in-cliques lookup; legality of a connection is the
/// S_xy-in-separators pre-check followed by a separation search.
class GraphState : public Representation {
public:
    using CliqueSet = std::unordered_set<VertexSet, VertexSetHash>;

    GraphState(int vertex_count, PotentialModel model, bool restricted_search = false);

    std::string_view name() const override { return "graph"; }
    int vertex_count() const override { return g_.order(); }

    SxyResult find_sxy(VertexId x, VertexId y) const override;
    MoveReport disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) override;
    MoveReport connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) override;
    UndirectedGraph export_graph() const override { return g_; }

    bool legality_disconnect(VertexId x, VertexId y) const;
    bool legality_connect(VertexId x, VertexId y) const;

    /// Separation test restricted to the subgraph induced by N_xy, the
    /// vertices adjacent to all of S_xy. Requires S_xy complete and x,y
    /// outside it; agrees with separates() there.
    bool restricted_separates(const VertexSet& sxy, VertexId x, VertexId y) const;

    /// Applies a legal move; ContractViolation when it is not legal.
    void apply_disconnect(VertexId x, VertexId y);
    void apply_connect(VertexId x, VertexId y);

    const UndirectedGraph& graph() const { return g_; }
    const CliqueSet& cliques() const { return cliques_; }
    const SeparatorMultiset& separators() const { return separators_; }
    double log_pi() const { return log_pi_; }

private:
    bool connect_separation_test(const VertexSet& sxy, VertexId x, VertexId y) const;

    UndirectedGraph g_;
    CliqueSet cliques_;
    SeparatorMultiset separators_;
    double log_pi_ = 0.0;
    PotentialModel model_;
    bool restricted_search_ = false;
};

} // namespace chordal
