#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netoverlap/errors.hpp"

namespace netoverlap {

// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

// One undirected edge with a positive weight, stored canonically with u < v.
struct WeightedEdge {
    NodeId u = 0;
    NodeId v = 0;
    double weight = 1.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Adjacency entry: neighbor id plus the weight of the connecting edge.
struct Neighbor {
    NodeId id = 0;
    double weight = 0.0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable undirected simple graph with positive edge weights.
///
/// Built once through WeightedGraph::build, which validates the edge list
/// (no self-loops, no duplicates, weights > 0, endpoints in range) and
/// produces sorted symmetric adjacency. All queries are const; concurrent
/// reads from any number of threads are safe.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Validates and assembles the graph. Input edges may be in any order
    // and orientation; they are canonicalized to u < v.
    // Throws SelfLoopError, DuplicateEdgeError, NonPositiveWeightError,
    // NodeOutOfRangeError.
    static WeightedGraph build(const std::vector<WeightedEdge>& edges,
                               std::size_t node_count);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges in canonical order: u < v, sorted by (u, v).
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    // Neighbors of i, sorted by neighbor id.
    std::span<const Neighbor> neighbors(NodeId i) const;

    // |N_i|
    std::size_t degree(NodeId i) const;

    // S_i: sum of weights of edges incident to i (0 for an isolated node).
    double strength(NodeId i) const;

    bool has_edge(NodeId i, NodeId j) const;

    // Weight of edge (i, j); throws NotAnEdgeError if absent.
    double edge_weight(NodeId i, NodeId j) const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    void check_node(NodeId i) const;

    std::size_t node_count_ = 0;
    std::vector<WeightedEdge> edges_;      // canonical order
    std::vector<std::size_t> offsets_;     // CSR offsets, size node_count_+1
    std::vector<Neighbor> adjacency_;      // grouped per node, sorted by id
    std::vector<double> strengths_;
};

// N_i ∩ N_j, sorted, never containing i or j. Throws SameNodeError if i == j.
std::vector<NodeId> common_neighbors(const WeightedGraph& g, NodeId i, NodeId j);

// (N_i ∪ N_j) \ {i, j}, sorted. Throws SameNodeError if i == j.
std::vector<NodeId> union_neighbors_excl(const WeightedGraph& g, NodeId i, NodeId j);

/// Per-node community labels, dense ids in [0, community_count).
struct CommunityAssignment {
    std::vector<std::uint32_t> membership;

    std::size_t community_count() const;

    friend bool operator==(const CommunityAssignment&, const CommunityAssignment&) = default;
};

// Checks that membership covers exactly node_count nodes and that community
// ids are dense with every community non-empty. Throws Error on violation.
void validate_communities(const CommunityAssignment& communities, std::size_t node_count);

} // namespace netoverlap
