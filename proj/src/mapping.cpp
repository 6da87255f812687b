#include "netoverlap/mapping.hpp"

#include <algorithm>
#include <string>

namespace netoverlap {

NeighborhoodMapping NeighborhoodMapping::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    NeighborhoodMapping m;
    m.entries_.reserve(entries.size());
    for (const Entry& e : entries) {
        if (e.second < 0.0) {
            throw Error("negative membership " + std::to_string(e.second) +
                        " for node " + std::to_string(e.first));
        }
        if (!m.entries_.empty() && m.entries_.back().first == e.first) {
            throw Error("duplicate key " + std::to_string(e.first));
        }
        if (e.second == 0.0) continue; // absent means zero
        m.entries_.push_back(e);
    }
    return m;
}

double NeighborhoodMapping::membership(NodeId node) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                               [](const Entry& e, NodeId id) { return e.first < id; });
    return (it != entries_.end() && it->first == node) ? it->second : 0.0;
}

NeighborhoodMapping NeighborhoodMapping::without(NodeId node) const {
    NeighborhoodMapping m;
    m.entries_.reserve(entries_.size());
    for (const Entry& e : entries_) {
        if (e.first != node) m.entries_.push_back(e);
    }
    return m;
}

NeighborhoodMapping mapping_union(const NeighborhoodMapping& a, const NeighborhoodMapping& b) {
    NeighborhoodMapping out;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::vector<NeighborhoodMapping::Entry> merged;
    merged.reserve(ea.size() + eb.size());
    std::size_t x = 0, y = 0;
    while (x < ea.size() || y < eb.size()) {
        if (y == eb.size() || (x < ea.size() && ea[x].first < eb[y].first)) {
            merged.push_back(ea[x++]);
        } else if (x == ea.size() || eb[y].first < ea[x].first) {
            merged.push_back(eb[y++]);
        } else {
            merged.emplace_back(ea[x].first, std::max(ea[x].second, eb[y].second));
            ++x;
            ++y;
        }
    }
    return NeighborhoodMapping::from_entries(std::move(merged));
}

NeighborhoodMapping mapping_intersection(const NeighborhoodMapping& a,
                                         const NeighborhoodMapping& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::vector<NeighborhoodMapping::Entry> merged;
    std::size_t x = 0, y = 0;
    while (x < ea.size() && y < eb.size()) {
        if (ea[x].first < eb[y].first) {
            ++x; // min with an absent key is 0, dropped
        } else if (eb[y].first < ea[x].first) {
            ++y;
        } else {
            merged.emplace_back(ea[x].first, std::min(ea[x].second, eb[y].second));
            ++x;
            ++y;
        }
    }
    return NeighborhoodMapping::from_entries(std::move(merged));
}

double mapping_size(const NeighborhoodMapping& m) {
    double sum = 0.0;
    for (const auto& [node, value] : m.entries()) sum += value;
    return sum;
}

NeighborhoodMapping neighborhood_mapping(const WeightedGraph& g, NodeId i) {
    std::vector<NeighborhoodMapping::Entry> entries;
    auto nbrs = g.neighbors(i);
    entries.reserve(nbrs.size());
    for (const Neighbor& nb : nbrs) entries.emplace_back(nb.id, nb.weight);
    return NeighborhoodMapping::from_entries(std::move(entries));
}

} // namespace netoverlap
