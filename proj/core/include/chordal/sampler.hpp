#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/potentials.hpp"
#include "chordal/representation.hpp"

namespace chordal {

struct ModelSpec {
    enum class Kind { kUniform, kMaxClique, kEdgePenalty };
    Kind kind = Kind::kUniform;
    int max_clique_size = 3;
    double alpha = 1.0;
};

PotentialModel make_model(const ModelSpec& spec);

enum class BackendSelection { kGraph, kJunction, kAlmond, kIbarra, kAll };

struct SamplerConfig {
    int n = 1;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    ModelSpec model;
    BackendSelection backend = BackendSelection::kGraph;
    std::uint64_t trace_thin = 1; // record every k-th iteration
    bool restricted_search = false;
    // In all-backend mode, compare exported graphs every this many
    // iterations (0 = only flag agreement is checked).
    std::uint64_t verify_every = 1000;
};

struct StepRecord {
    std::uint64_t iteration = 0; // 1-based
    VertexId x = 0, y = 0;
    MoveKind kind = MoveKind::kConnect;
    bool draw_passed = false;
    bool legal = false; // evaluated only when the draw passes, else false
    bool applied = false;
    std::uint64_t edge_count = 0;
    double log_pi = 0.0;
    double window_acceptance = 0.0; // applied proportion over the trailing window
};

struct RunStats {
    std::uint64_t iterations = 0;
    std::uint64_t applied = 0;
    std::uint64_t final_edge_count = 0;
    double final_log_pi = 0.0;
    double mean_acceptance = 0.0;
    double wall_seconds = 0.0;
};

/// Draws an unordered pair uniformly over the n(n-1)/2 candidates, from a
/// single bounded draw so the sequence is reproducible for a given seed.
std::pair<VertexId, VertexId> propose_pair(std::mt19937_64& rng, int n);

/// Uniform variate strictly inside (0,1); log of it is always finite.
double uniform_open01(std::mt19937_64& rng);

/// Size of the sliding window used for the acceptance-proportion trace.
inline constexpr std::uint64_t kAcceptanceWindow = 10000;

/// The Metropolis chain over decomposable graphs: uniform pair proposal,
/// acceptance draw, legality check, apply. The acceptance draw is tested
/// before the costlier legality check, and one uniform variate is consumed
/// per iteration regardless of outcome, so different backends fed the same
/// seed stay in lockstep. With BackendSelection::kAll every backend runs on
/// the shared proposal sequence and must agree at every step.
class Sampler {
public:
    explicit Sampler(const SamplerConfig& config);

    /// Advances the chain one iteration.
    StepRecord step();

    /// Runs config.iterations steps; records pass through `sink` every
    /// trace_thin-th iteration when a sink is given.
    RunStats run(const std::function<void(const StepRecord&)>& sink = nullptr);

    const SamplerConfig& config() const { return config_; }
    std::uint64_t iteration() const { return iteration_; }
    const UndirectedGraph& graph() const { return mirror_; }
    double log_pi() const { return log_pi_; }

    std::size_t representation_count() const { return reps_.size(); }
    const Representation& representation(std::size_t i = 0) const { return *reps_[i]; }

private:
    void verify_exports() const;

    SamplerConfig config_;
    PotentialModel model_;
    std::vector<std::unique_ptr<Representation>> reps_;
    UndirectedGraph mirror_;
    std::mt19937_64 rng_;
    double log_pi_ = 0.0;
    std::uint64_t iteration_ = 0;
    std::uint64_t applied_total_ = 0;
    // ring buffer over the trailing kAcceptanceWindow iterations
    std::vector<bool> window_;
    std::uint64_t window_pos_ = 0;
    std::uint64_t window_count_ = 0;
    std::uint64_t window_filled_ = 0;
};

} // namespace chordal
