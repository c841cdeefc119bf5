#include "chordal/vertex_set.hpp"

#include <algorithm>

namespace chordal {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : ids_(ids) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(VertexId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(VertexId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::with(VertexId v) const {
    VertexSet out = *this;
    out.insert(v);
    return out;
}

VertexSet VertexSet::without(VertexId v) const {
    VertexSet out = *this;
    out.erase(v);
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (size() > other.size()) return false;
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::is_proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && is_subset_of(other);
}

std::size_t VertexSet::hash() const {
    // FNV-1a over the sorted elements
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : ids_) {
        h ^= static_cast<std::uint64_t>(v) + 1;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(ids_[i]);
    }
    out += '}';
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.ids_.reserve(a.ids_.size() + b.ids_.size());
    std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                          std::back_inserter(out.ids_));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
    return out;
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void SeparatorMultiset::add(const VertexSet& s, int count) {
    counts_[s] += count;
    total_ += count;
}

bool SeparatorMultiset::remove_one(const VertexSet& s) {
    auto it = counts_.find(s);
    if (it == counts_.end()) return false;
    if (--it->second == 0) counts_.erase(it);
    --total_;
    return true;
}

int SeparatorMultiset::count(const VertexSet& s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<VertexSet, int>> SeparatorMultiset::sorted() const {
    std::vector<std::pair<VertexSet, int>> out(counts_.begin(), counts_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return size_lex_less(a.first, b.first);
    });
    return out;
}

} // namespace chordal
