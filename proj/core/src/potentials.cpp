#include "chordal/potentials.hpp"

#include "chordal/errors.hpp"

namespace chordal {

PotentialModel uniform_model() {
    return PotentialModel("uniform", [](const VertexSet&) { return 0.0; });
}

PotentialModel max_clique_model(int k) {
    if (k < 1) throw ModelMisuse("max_clique_model requires k >= 1");
    return PotentialModel("max-clique-" + std::to_string(k),
                          [k](const VertexSet& s) { return s.size() <= k ? 0.0 : kNegInf; });
}

PotentialModel edge_penalty_model(double alpha) {
    return PotentialModel("edge-penalty-" + std::to_string(alpha), [alpha](const VertexSet& s) {
        const double pairs = 0.5 * s.size() * (s.size() - 1);
        return -alpha * pairs;
    });
}

GraphLogProb graph_log_prob(const PotentialModel& model, const std::vector<VertexSet>& cliques,
                            const SeparatorMultiset& separators) {
    double clique_sum = 0.0;
    bool clique_zero = false;
    for (const VertexSet& c : cliques) {
        const double lp = model.log_phi(c);
        if (lp == kNegInf) {
            clique_zero = true;
        } else {
            clique_sum += lp;
        }
    }
    double sep_sum = 0.0;
    bool sep_zero = false;
    for (const auto& [s, mult] : separators.counts()) {
        const double lp = model.log_phi(s);
        if (lp == kNegInf) {
            sep_zero = true;
        } else {
            sep_sum += mult * lp;
        }
    }
    if (clique_zero) return kNegInf;
    if (sep_zero)
        throw ModelMisuse("separator with zero potential while all cliques are positive");
    return clique_sum - sep_sum;
}

} // namespace chordal
