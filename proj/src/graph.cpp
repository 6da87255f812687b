#include "netoverlap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace netoverlap {

namespace {

std::string edge_str(NodeId u, NodeId v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

} // namespace

WeightedGraph WeightedGraph::build(const std::vector<WeightedEdge>& edges,
                                   std::size_t node_count) {
    WeightedGraph g;
    g.node_count_ = node_count;

    g.edges_.reserve(edges.size());
    for (const WeightedEdge& e : edges) {
        if (e.u >= node_count || e.v >= node_count) {
            throw NodeOutOfRangeError("edge " + edge_str(e.u, e.v) +
                                      " references a node >= node count " +
                                      std::to_string(node_count));
        }
        if (e.u == e.v) {
            throw SelfLoopError("self-loop at node " + std::to_string(e.u));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw NonPositiveWeightError("edge " + edge_str(e.u, e.v) +
                                         " has non-positive weight " +
                                         std::to_string(e.weight));
        }
        WeightedEdge canon = e;
        if (canon.u > canon.v) std::swap(canon.u, canon.v);
        g.edges_.push_back(canon);
    }

    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair{a.u, a.v} < std::pair{b.u, b.v};
              });
    for (std::size_t k = 1; k < g.edges_.size(); ++k) {
        if (g.edges_[k - 1].u == g.edges_[k].u && g.edges_[k - 1].v == g.edges_[k].v) {
            throw DuplicateEdgeError("duplicate edge " +
                                     edge_str(g.edges_[k].u, g.edges_[k].v));
        }
    }

    std::vector<std::size_t> deg(node_count, 0);
    for (const WeightedEdge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i) {
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    }

    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const WeightedEdge& e : g.edges_) {
        g.adjacency_[cursor[e.u]++] = Neighbor{e.v, e.weight};
        g.adjacency_[cursor[e.v]++] = Neighbor{e.u, e.weight};
    }
    for (std::size_t i = 0; i < node_count; ++i) {
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }

    g.strengths_.assign(node_count, 0.0);
    for (std::size_t i = 0; i < node_count; ++i) {
        double s = 0.0;
        for (const Neighbor& nb : g.neighbors(static_cast<NodeId>(i))) s += nb.weight;
        g.strengths_[i] = s;
    }
    return g;
}

void WeightedGraph::check_node(NodeId i) const {
    if (i >= node_count_) {
        throw NodeOutOfRangeError("node " + std::to_string(i) +
                                  " >= node count " + std::to_string(node_count_));
    }
}

std::span<const Neighbor> WeightedGraph::neighbors(NodeId i) const {
    check_node(i);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::size_t WeightedGraph::degree(NodeId i) const {
    check_node(i);
    return offsets_[i + 1] - offsets_[i];
}

double WeightedGraph::strength(NodeId i) const {
    check_node(i);
    return strengths_[i];
}

bool WeightedGraph::has_edge(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    auto nbrs = neighbors(i);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j,
                               [](const Neighbor& nb, NodeId id) { return nb.id < id; });
    return it != nbrs.end() && it->id == j;
}

double WeightedGraph::edge_weight(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    auto nbrs = neighbors(i);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j,
                               [](const Neighbor& nb, NodeId id) { return nb.id < id; });
    if (it == nbrs.end() || it->id != j) {
        throw NotAnEdgeError("no edge " + edge_str(i, j));
    }
    return it->weight;
}

std::vector<NodeId> common_neighbors(const WeightedGraph& g, NodeId i, NodeId j) {
    if (i == j) throw SameNodeError("node pair (" + std::to_string(i) + ", " +
                                    std::to_string(i) + ") is not a pair");
    auto a = g.neighbors(i);
    auto b = g.neighbors(j);
    std::vector<NodeId> out;
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x].id < b[y].id) {
            ++x;
        } else if (a[x].id > b[y].id) {
            ++y;
        } else {
            // a common neighbor can never be i or j in a simple graph
            out.push_back(a[x].id);
            ++x;
            ++y;
        }
    }
    return out;
}

std::vector<NodeId> union_neighbors_excl(const WeightedGraph& g, NodeId i, NodeId j) {
    if (i == j) throw SameNodeError("node pair (" + std::to_string(i) + ", " +
                                    std::to_string(i) + ") is not a pair");
    auto a = g.neighbors(i);
    auto b = g.neighbors(j);
    std::vector<NodeId> out;
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
        NodeId next;
        if (y == b.size() || (x < a.size() && a[x].id <= b[y].id)) {
            next = a[x].id;
            if (x < a.size() && y < b.size() && a[x].id == b[y].id) ++y;
            ++x;
        } else {
            next = b[y].id;
            ++y;
        }
        if (next != i && next != j) out.push_back(next);
    }
    return out;
}

std::size_t CommunityAssignment::community_count() const {
    std::uint32_t max_id = 0;
    if (membership.empty()) return 0;
    for (std::uint32_t c : membership) max_id = std::max(max_id, c);
    return static_cast<std::size_t>(max_id) + 1;
}

void validate_communities(const CommunityAssignment& communities, std::size_t node_count) {
    if (communities.membership.size() != node_count) {
        throw Error("community assignment covers " +
                    std::to_string(communities.membership.size()) + " nodes, expected " +
                    std::to_string(node_count));
    }
    if (node_count == 0) return;
    std::vector<std::size_t> sizes(communities.community_count(), 0);
    for (std::uint32_t c : communities.membership) ++sizes[c];
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (sizes[c] == 0) {
            throw Error("community " + std::to_string(c) + " is empty");
        }
    }
}

} // namespace netoverlap
