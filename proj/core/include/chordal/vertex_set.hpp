#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

namespace chordal {

using VertexId = int;

/// Canonical content-compared set of vertex ids.
///
/// Stored as a sorted, duplicate-free vector so that equality, ordering,
/// subset tests and intersections are linear merges, and so the set can key
/// hash maps by content. This is the common currency for cliques,
/// separators and the S_xy / S_x / S_y / C_xy sets.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> ids);
    explicit VertexSet(std::vector<VertexId> ids); // sorts and dedups

    static VertexSet single(VertexId v) { return VertexSet{v}; }

    bool empty() const { return ids_.empty(); }
    int size() const { return static_cast<int>(ids_.size()); }
    bool contains(VertexId v) const;

    void insert(VertexId v);
    void erase(VertexId v); // no-op when absent

    VertexSet with(VertexId v) const;
    VertexSet without(VertexId v) const;

    bool is_subset_of(const VertexSet& other) const;
    bool is_proper_subset_of(const VertexSet& other) const;

    const std::vector<VertexId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    std::size_t hash() const;
    std::string to_string() const; // "{0 2 5}"

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

    friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
    friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
    friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);

private:
    std::vector<VertexId> ids_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Orders by cardinality first, content second. Used wherever a smallest or
// largest set has to be picked deterministically.
bool size_lex_less(const VertexSet& a, const VertexSet& b);

/// Multiset of separators stored as a count map, counting each set with its
/// multiplicity.
class SeparatorMultiset {
public:
    using CountMap = std::unordered_map<VertexSet, int, VertexSetHash>;

    void add(const VertexSet& s, int count = 1);
    /// Removes one instance; returns false (and changes nothing) when absent.
    bool remove_one(const VertexSet& s);

    bool contains(const VertexSet& s) const { return counts_.count(s) > 0; }
    int count(const VertexSet& s) const;
    int total() const { return total_; }       // with multiplicity
    int distinct() const { return static_cast<int>(counts_.size()); }
    bool empty() const { return counts_.empty(); }

    const CountMap& counts() const { return counts_; }
    /// Deterministic (size, content)-sorted view of (set, multiplicity).
    std::vector<std::pair<VertexSet, int>> sorted() const;

    friend bool operator==(const SeparatorMultiset& a, const SeparatorMultiset& b) {
        return a.counts_ == b.counts_;
    }

private:
    CountMap counts_;
    int total_ = 0;
};

} // namespace chordal
