#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "netoverlap/graph.hpp"

namespace netoverlap {

/// A set with graded membership: each node maps to a positive real, absent
/// nodes count as zero. Union is the pointwise maximum, intersection the
/// pointwise minimum, and size the sum of memberships, so on all-ones
/// memberships the algebra collapses to ordinary sets.
///
/// Canonical form: entries sorted by node id, no zero-valued entries, so
/// equality is structural.
class NeighborhoodMapping {
public:
    using Entry = std::pair<NodeId, double>;

    NeighborhoodMapping() = default;

    // Canonicalizes: sorts by key, drops zero memberships.
    // Throws Error on duplicate keys or negative memberships.
    static NeighborhoodMapping from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t entry_count() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Membership of `node`; 0 when absent.
    double membership(NodeId node) const;

    // Copy with `node` removed (no-op when absent).
    NeighborhoodMapping without(NodeId node) const;

    friend bool operator==(const NeighborhoodMapping&, const NeighborhoodMapping&) = default;

private:
    std::vector<Entry> entries_;
};

// Pointwise max of the memberships.
NeighborhoodMapping mapping_union(const NeighborhoodMapping& a, const NeighborhoodMapping& b);

// Pointwise min of the memberships; keys absent from either side drop out.
NeighborhoodMapping mapping_intersection(const NeighborhoodMapping& a,
                                         const NeighborhoodMapping& b);

// Sum of all memberships.
double mapping_size(const NeighborhoodMapping& m);

// The neighbor set of i as a graded set: node x maps to the weight of the
// edge (i, x). Its size equals strength(i); at unit weights, degree(i).
NeighborhoodMapping neighborhood_mapping(const WeightedGraph& g, NodeId i);

} // namespace netoverlap
