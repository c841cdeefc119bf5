#include "chordal/sampler.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "chordal/errors.hpp"

namespace chordal {

PotentialModel make_model(const ModelSpec& spec) {
    switch (spec.kind) {
    case ModelSpec::Kind::kUniform: return uniform_model();
    case ModelSpec::Kind::kMaxClique: return max_clique_model(spec.max_clique_size);
    case ModelSpec::Kind::kEdgePenalty: return edge_penalty_model(spec.alpha);
    }
    throw StructuralError("unknown model kind");
}

namespace {

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased without widening types.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % bound;
}

// Number of pairs whose first element is below x, for pairs ordered
// (0,1),(0,2),...,(1,2),...
std::uint64_t pairs_below(std::uint64_t x, std::uint64_t n) {
    return x * (2 * n - x - 1) / 2;
}

} // namespace

std::pair<VertexId, VertexId> propose_pair(std::mt19937_64& rng, int n) {
    if (n < 2) throw StructuralError("pair proposal requires at least two vertices");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t total = un * (un - 1) / 2;
    const std::uint64_t r = bounded_uniform(rng, total);
    // Unrank: find x with pairs_below(x) <= r < pairs_below(x+1). The float
    // estimate lands within a step or two; integer fix-up makes it exact.
    double est = static_cast<double>(n) - 0.5 -
                 std::sqrt((static_cast<double>(n) - 0.5) * (static_cast<double>(n) - 0.5) -
                           2.0 * static_cast<double>(r));
    std::uint64_t x = est <= 0.0 ? 0 : static_cast<std::uint64_t>(est);
    if (x > un - 2) x = un - 2;
    while (pairs_below(x + 1, un) <= r) ++x;
    while (pairs_below(x, un) > r) --x;
    const std::uint64_t y = x + 1 + (r - pairs_below(x, un));
    return {static_cast<VertexId>(x), static_cast<VertexId>(y)};
}

double uniform_open01(std::mt19937_64& rng) {
    // 53 random bits, offset half a step: lands strictly inside (0,1).
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

Sampler::Sampler(const SamplerConfig& config)
    : config_(config), model_(make_model(config.model)), mirror_(config.n) {
    if (config.n < 1) throw StructuralError("sampler requires n >= 1");
    if (config.trace_thin < 1) throw StructuralError("trace_thin must be >= 1");
    rng_.seed(config.seed);

    const auto add = [&](BackendKind kind) {
        reps_.push_back(
            make_representation(kind, config.n, model_, config.restricted_search));
    };
    switch (config.backend) {
    case BackendSelection::kGraph: add(BackendKind::kGraph); break;
    case BackendSelection::kJunction: add(BackendKind::kJunctionTree); break;
    case BackendSelection::kAlmond: add(BackendKind::kAlmondTree); break;
    case BackendSelection::kIbarra: add(BackendKind::kIbarra); break;
    case BackendSelection::kAll:
        add(BackendKind::kGraph);
        add(BackendKind::kJunctionTree);
        add(BackendKind::kAlmondTree);
        add(BackendKind::kIbarra);
        break;
    }

    log_pi_ = -(config.n - 1) * model_.log_phi(VertexSet{});
    for (VertexId v = 0; v < config.n; ++v) log_pi_ += model_.log_phi(VertexSet::single(v));

    window_.assign(kAcceptanceWindow, false);
}

void Sampler::verify_exports() const {
    const UndirectedGraph expected = mirror_;
    for (const auto& rep : reps_) {
        if (!(rep->export_graph() == expected))
            throw VerificationError("backend " + std::string(rep->name()) +
                                    " exports a different graph at iteration " +
                                    std::to_string(iteration_));
    }
}

StepRecord Sampler::step() {
    ++iteration_;
    const auto [x, y] = propose_pair(rng_, config_.n);
    const double log_u = std::log(uniform_open01(rng_));

    const VertexSet sxy = mirror_.common_neighbours(x, y);
    const VertexSet sx = sxy.with(x);
    const VertexSet sy = sxy.with(y);
    const VertexSet cxy = sx.with(y);
    const bool is_edge = mirror_.has_edge(x, y);

    // log acceptance ratio split into the target-state and current-state
    // halves so zero potentials stay well defined: a zero numerator always
    // fails, a zero denominator (with positive numerator) always passes.
    double num, den;
    if (is_edge) {
        num = model_.log_phi(sx) + model_.log_phi(sy);
        den = model_.log_phi(sxy) + model_.log_phi(cxy);
    } else {
        num = model_.log_phi(sxy) + model_.log_phi(cxy);
        den = model_.log_phi(sx) + model_.log_phi(sy);
    }
    bool draw_passed;
    if (num == kNegInf) {
        draw_passed = false;
    } else if (den == kNegInf) {
        draw_passed = true;
    } else {
        draw_passed = log_u <= num - den;
    }

    StepRecord rec;
    rec.iteration = iteration_;
    rec.x = x;
    rec.y = y;
    rec.kind = is_edge ? MoveKind::kDisconnect : MoveKind::kConnect;

    if (draw_passed) {
        bool first = true;
        bool applied = false;
        for (const auto& rep : reps_) {
            const MoveReport r = is_edge ? rep->disconnect_if_enabled(x, y, cxy)
                                         : rep->connect_if_enabled(x, y, sxy);
            if (first) {
                applied = r.applied;
                first = false;
            } else if (r.applied != applied) {
                throw VerificationError(
                    "backends disagree at iteration " + std::to_string(iteration_) +
                    " on pair (" + std::to_string(x) + "," + std::to_string(y) + "): " +
                    std::string(reps_.front()->name()) + "=" +
                    (applied ? "legal" : "illegal") + " " + std::string(rep->name()) + "=" +
                    (r.applied ? "legal" : "illegal"));
            }
        }
        rec.legal = applied;
        rec.applied = applied;
        if (applied) {
            if (is_edge) {
                mirror_.remove_edge(x, y);
            } else {
                mirror_.add_edge(x, y);
            }
            log_pi_ += num - den;
            ++applied_total_;
        }
    }

    // trailing acceptance window
    if (window_filled_ == kAcceptanceWindow) {
        if (window_[window_pos_]) --window_count_;
    } else {
        ++window_filled_;
    }
    window_[window_pos_] = rec.applied;
    if (rec.applied) ++window_count_;
    window_pos_ = (window_pos_ + 1) % kAcceptanceWindow;

    rec.edge_count = mirror_.edge_count();
    rec.log_pi = log_pi_;
    rec.window_acceptance =
        static_cast<double>(window_count_) / static_cast<double>(window_filled_);

    if (reps_.size() > 1 && config_.verify_every > 0 &&
        iteration_ % config_.verify_every == 0) {
        verify_exports();
    }
    return rec;
}

RunStats Sampler::run(const std::function<void(const StepRecord&)>& sink) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < config_.iterations; ++i) {
        const StepRecord rec = step();
        if (sink && rec.iteration % config_.trace_thin == 0) sink(rec);
    }
    if (reps_.size() > 1) verify_exports();
    const auto t1 = std::chrono::steady_clock::now();

    RunStats stats;
    stats.iterations = config_.iterations;
    stats.applied = applied_total_;
    stats.final_edge_count = mirror_.edge_count();
    stats.final_log_pi = log_pi_;
    stats.mean_acceptance =
        config_.iterations == 0
            ? 0.0
            : static_cast<double>(applied_total_) / static_cast<double>(config_.iterations);
    stats.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return stats;
}

} // namespace chordal
