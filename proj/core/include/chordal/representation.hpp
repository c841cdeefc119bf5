#pragma once

#include <memory>
#include <string_view>

#include "chordal/graph.hpp"
#include "chordal/potentials.hpp"
#include "chordal/vertex_set.hpp"

namespace chordal {

enum class MoveKind { kConnect, kDisconnect };

/// Outcome of asking a representation to apply an edge perturbation. When
/// applied is false the representation is untouched.
struct MoveReport {
    bool applied = false;
    MoveKind kind = MoveKind::kConnect;
    VertexSet enabler; // C_xy for disconnections, S_xy for connections
};

struct SxyResult {
    VertexSet sxy;
    bool connected = false;
};

/// The uniform contract every backend implements so the sampler engine and
/// the verification harness stay representation-agnostic. All backends
/// start at the trivial (empty) graph on {0..n-1}.
///
/// The enabler sets (C_xy / S_xy) are computed once by the caller, normally
/// from the raw graph, and passed in; find_sxy recovers them from the
/// structure alone for standalone use. All legality checks run before any
/// structural edit, so a rejected move leaves the state bit-identical.
class Representation {
public:
    virtual ~Representation() = default;

    virtual std::string_view name() const = 0;
    virtual int vertex_count() const = 0;

    /// S_xy of the represented graph plus whether (x,y) is an edge.
    virtual SxyResult find_sxy(VertexId x, VertexId y) const = 0;

    /// Removes edge (x,y) iff C_xy = S_xy + {x,y} is a clique of the current
    /// graph. Throws ContractViolation when (x,y) is not an edge.
    virtual MoveReport disconnect_if_enabled(VertexId x, VertexId y, const VertexSet& cxy) = 0;

    /// Adds edge (x,y) iff S_xy is a separator of the current graph that
    /// separates x from y. Throws ContractViolation when (x,y) is an edge.
    virtual MoveReport connect_if_enabled(VertexId x, VertexId y, const VertexSet& sxy) = 0;

    /// The represented decomposable graph: the union of pairwise adjacencies
    /// implied by the current cliques.
    virtual UndirectedGraph export_graph() const = 0;
};

enum class BackendKind { kGraph, kJunctionTree, kAlmondTree, kIbarra };

std::string_view backend_name(BackendKind kind);

/// Builds a backend representing the trivial graph on {0..n-1}. The model
/// is used only by the graph backend (it tracks log pi); restricted_search
/// selects the induced-subgraph separation test there.
std::unique_ptr<Representation> make_representation(BackendKind kind, int vertex_count,
                                                    const PotentialModel& model,
                                                    bool restricted_search = false);

} // namespace chordal
