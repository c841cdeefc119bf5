#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace chordal {

/// Queue discipline for the generic path search. Lightest/heaviest apply to
/// searches over set-valued vertices and order the queue by the supplied
/// weight; ties go to the earliest-enqueued entry so runs are reproducible.
enum class SearchDiscipline {
    kFifo,
    kLifo,
    kLightestFirst,
    kHeaviestFirst,
};

namespace detail {

struct QueueEntry {
    int weight;
    std::uint64_t seq;
    int vertex;
};

struct LightestFirstCmp {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.seq > b.seq;
    }
};

struct HeaviestFirstCmp {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.seq > b.seq;
    }
};

} // namespace detail

/// Generic path search.
///
/// Vertices enter the queue when first encountered (and are marked explored
/// then); only vertices passing `enqueueable` are enqueued, and the target
/// test runs when a vertex is removed from the head of the queue. The
/// returned path runs from `start` to the first vertex that satisfies
/// `is_target`, reconstructed through the backtracking map, or nullopt when
/// the search exhausts. A target that fails `enqueueable` is unreachable
/// unless it is the start itself.
///
/// `neighbours_of(v, f)` must invoke `f(u)` for every neighbour u of v.
template <typename NeighbourFn, typename ContinueFn, typename TargetFn, typename WeightFn>
std::optional<std::vector<int>> find_path(int start, NeighbourFn&& neighbours_of,
                                          SearchDiscipline discipline, ContinueFn&& enqueueable,
                                          TargetFn&& is_target, WeightFn&& weight_of) {
    std::unordered_set<int> explored;
    std::unordered_map<int, int> parent;

    auto backtrack = [&](int v) {
        std::vector<int> path{v};
        auto it = parent.find(v);
        while (it != parent.end()) {
            path.push_back(it->second);
            it = parent.find(it->second);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::deque<int> queue;
    using PQ = std::vector<detail::QueueEntry>;
    std::priority_queue<detail::QueueEntry, PQ, detail::LightestFirstCmp> light;
    std::priority_queue<detail::QueueEntry, PQ, detail::HeaviestFirstCmp> heavy;
    std::uint64_t seq = 0;

    auto push = [&](int v) {
        switch (discipline) {
        case SearchDiscipline::kFifo:
        case SearchDiscipline::kLifo:
            queue.push_back(v);
            break;
        case SearchDiscipline::kLightestFirst:
            light.push({weight_of(v), seq++, v});
            break;
        case SearchDiscipline::kHeaviestFirst:
            heavy.push({weight_of(v), seq++, v});
            break;
        }
    };
    auto empty = [&]() {
        switch (discipline) {
        case SearchDiscipline::kFifo:
        case SearchDiscipline::kLifo:
            return queue.empty();
        case SearchDiscipline::kLightestFirst:
            return light.empty();
        default:
            return heavy.empty();
        }
    };
    auto pop = [&]() {
        int v = 0;
        switch (discipline) {
        case SearchDiscipline::kFifo:
            v = queue.front();
            queue.pop_front();
            break;
        case SearchDiscipline::kLifo:
            v = queue.back();
            queue.pop_back();
            break;
        case SearchDiscipline::kLightestFirst:
            v = light.top().vertex;
            light.pop();
            break;
        case SearchDiscipline::kHeaviestFirst:
            v = heavy.top().vertex;
            heavy.pop();
            break;
        }
        return v;
    };

    explored.insert(start);
    push(start);
    while (!empty()) {
        const int b = pop();
        if (is_target(b)) return backtrack(b);
        neighbours_of(b, [&](int c) {
            if (explored.count(c)) return;
            explored.insert(c);
            if (enqueueable(c)) {
                parent.emplace(c, b);
                push(c);
            }
        });
    }
    return std::nullopt;
}

template <typename NeighbourFn, typename ContinueFn, typename TargetFn>
std::optional<std::vector<int>> find_path(int start, NeighbourFn&& neighbours_of,
                                          SearchDiscipline discipline, ContinueFn&& enqueueable,
                                          TargetFn&& is_target) {
    return find_path(start, neighbours_of, discipline, enqueueable, is_target,
                     [](int) { return 0; });
}

/// Breadth-first traversal of everything reachable from `start` through
/// vertices passing `enqueueable`; calls `visit` on each (start included,
/// provided it passes the predicate itself).
template <typename NeighbourFn, typename ContinueFn, typename VisitFn>
void for_each_reachable(int start, NeighbourFn&& neighbours_of, ContinueFn&& enqueueable,
                        VisitFn&& visit) {
    if (!enqueueable(start)) return;
    std::unordered_set<int> explored{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
        const int b = queue.front();
        queue.pop_front();
        visit(b);
        neighbours_of(b, [&](int c) {
            if (explored.count(c)) return;
            explored.insert(c);
            if (enqueueable(c)) queue.push_back(c);
        });
    }
}

} // namespace chordal
