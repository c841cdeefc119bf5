#include "chordal/representation.hpp"

#include "chordal/almond_tree.hpp"
#include "chordal/errors.hpp"
#include "chordal/graph_rep.hpp"
#include "chordal/ibarra_graph.hpp"
#include "chordal/junction_tree.hpp"

namespace chordal {

std::string_view backend_name(BackendKind kind) {
    switch (kind) {
    case BackendKind::kGraph: return "graph";
    case BackendKind::kJunctionTree: return "junction";
    case BackendKind::kAlmondTree: return "almond";
    case BackendKind::kIbarra: return "ibarra";
    }
    throw StructuralError("unknown backend kind");
}

std::unique_ptr<Representation> make_representation(BackendKind kind, int vertex_count,
                                                    const PotentialModel& model,
                                                    bool restricted_search) {
    switch (kind) {
    case BackendKind::kGraph:
        return std::make_unique<GraphState>(vertex_count, model, restricted_search);
    case BackendKind::kJunctionTree:
        return std::make_unique<JunctionTree>(vertex_count);
    case BackendKind::kAlmondTree:
        return std::make_unique<AlmondTree>(vertex_count);
    case BackendKind::kIbarra:
        return std::make_unique<IbarraGraph>(vertex_count);
    }
    throw StructuralError("unknown backend kind");
}

} // namespace chordal
