#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "chordal/vertex_set.hpp"

namespace chordal {

/// log pi(G) up to the normalizing constant; -inf encodes pi(G) = 0.
using GraphLogProb = double;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Log-domain potential over vertex sets. Together with Sum_C log phi(C) -
/// Sum_S log phi(S) this defines a structurally Markov distribution on
/// decomposable graphs. Deterministic: the same set always gets the same
/// value. phi = 0 is encoded as -inf.
class PotentialModel {
public:
    using LogPhiFn = std::function<double(const VertexSet&)>;

    PotentialModel() = default;
    PotentialModel(std::string name, LogPhiFn log_phi)
        : name_(std::move(name)), log_phi_(std::move(log_phi)) {}

    double log_phi(const VertexSet& s) const { return log_phi_(s); }
    const std::string& name() const { return name_; }

private:
    std::string name_ = "uniform";
    LogPhiFn log_phi_ = [](const VertexSet&) { return 0.0; };
};

/// phi(A) = 1 for every set: the uniform distribution over decomposable
/// graphs.
PotentialModel uniform_model();

/// phi(A) = 1 when |A| <= k and 0 otherwise: uniform over decomposable
/// graphs whose cliques have at most k vertices.
PotentialModel max_clique_model(int k);

/// log phi(A) = -alpha * |A|(|A|-1)/2, which makes
/// log pi(G) = -alpha * |E| + const: an edge penalty favouring small graphs.
PotentialModel edge_penalty_model(double alpha);

/// Sum of clique log-potentials minus the separator log-potentials counted
/// with multiplicity. Returns -inf when some clique has phi = 0; throws
/// ModelMisuse when a separator has phi = 0 while every clique is positive
/// (pi is undefined there).
GraphLogProb graph_log_prob(const PotentialModel& model, const std::vector<VertexSet>& cliques,
                            const SeparatorMultiset& separators);

} // namespace chordal
