#include "netoverlap/overlap.hpp"

#include <algorithm>

#include "netoverlap/mapping.hpp"

namespace netoverlap {

namespace {

OverlapValue make_value(double numerator, double denominator) {
    if (denominator == 0.0) return {0.0, true};
    return {std::clamp(numerator / denominator, 0.0, 1.0), false};
}

// Both measures below walk the two sorted adjacency lists in lockstep.
double require_edge(const WeightedGraph& g, NodeId i, NodeId j) {
    return g.edge_weight(i, j); // throws NotAnEdgeError
}

} // namespace

std::string measure_name(Measure m) {
    switch (m) {
    case Measure::kUnweighted: return "unweighted";
    case Measure::kWeightedRef: return "weighted_ref";
    case Measure::kWeightedMinmax: return "weighted_minmax";
    }
    return "unknown";
}

Measure measure_from_name(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '-', '_');
    if (s == "unweighted") return Measure::kUnweighted;
    if (s == "weighted_ref") return Measure::kWeightedRef;
    if (s == "weighted_minmax") return Measure::kWeightedMinmax;
    throw Error("unknown measure '" + name + "'");
}

OverlapValue overlap_unweighted(const WeightedGraph& g, NodeId i, NodeId j) {
    require_edge(g, i, j);
    auto a = g.neighbors(i);
    auto b = g.neighbors(j);
    std::size_t common = 0;
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x].id < b[y].id) {
            ++x;
        } else if (a[x].id > b[y].id) {
            ++y;
        } else {
            ++common;
            ++x;
            ++y;
        }
    }
    double c = static_cast<double>(common);
    double denom = static_cast<double>(a.size() + b.size()) - 2.0 - c;
    return make_value(c, denom);
}

OverlapValue overlap_weighted_ref(const WeightedGraph& g, NodeId i, NodeId j) {
    double w_ij = require_edge(g, i, j);
    auto a = g.neighbors(i);
    auto b = g.neighbors(j);
    double numerator = 0.0;
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x].id < b[y].id) {
            ++x;
        } else if (a[x].id > b[y].id) {
            ++y;
        } else {
            numerator += a[x].weight + b[y].weight;
            ++x;
            ++y;
        }
    }
    double denom = g.strength(i) + g.strength(j) - 2.0 * w_ij;
    return make_value(numerator, denom);
}

OverlapValue overlap_weighted_minmax(const WeightedGraph& g, NodeId i, NodeId j) {
    require_edge(g, i, j);
    auto a = g.neighbors(i);
    auto b = g.neighbors(j);
    double numerator = 0.0;   // sum of min over common neighbors
    double denominator = 0.0; // sum of max over the union minus {i, j}
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
        NodeId node;
        double wi = 0.0, wj = 0.0; // a missing edge contributes weight 0
        if (y == b.size() || (x < a.size() && a[x].id < b[y].id)) {
            node = a[x].id;
            wi = a[x].weight;
            ++x;
        } else if (x == a.size() || b[y].id < a[x].id) {
            node = b[y].id;
            wj = b[y].weight;
            ++y;
        } else {
            node = a[x].id;
            wi = a[x].weight;
            wj = b[y].weight;
            ++x;
            ++y;
        }
        if (node == i || node == j) continue;
        numerator += std::min(wi, wj);
        denominator += std::max(wi, wj);
    }
    return make_value(numerator, denominator);
}

OverlapValue overlap_via_mappings(const WeightedGraph& g, NodeId i, NodeId j) {
    require_edge(g, i, j);
    NeighborhoodMapping mi = neighborhood_mapping(g, i);
    NeighborhoodMapping mj = neighborhood_mapping(g, j);
    double numerator = mapping_size(mapping_intersection(mi, mj));
    double denominator = mapping_size(mapping_union(mi, mj).without(i).without(j));
    return make_value(numerator, denominator);
}

std::vector<EdgeOverlapRecord> all_edge_overlaps(const WeightedGraph& g, Measure measure) {
    OverlapValue (*fn)(const WeightedGraph&, NodeId, NodeId) = nullptr;
    switch (measure) {
    case Measure::kUnweighted: fn = overlap_unweighted; break;
    case Measure::kWeightedRef: fn = overlap_weighted_ref; break;
    case Measure::kWeightedMinmax: fn = overlap_weighted_minmax; break;
    }
    std::vector<EdgeOverlapRecord> records;
    records.reserve(g.edge_count());
    for (const WeightedEdge& e : g.edges()) {
        records.push_back({e.u, e.v, measure, fn(g, e.u, e.v)});
    }
    return records;
}

double mean_edge_overlap(const WeightedGraph& g, Measure measure) {
    if (g.edge_count() == 0) return 0.0;
    double sum = 0.0;
    for (const EdgeOverlapRecord& rec : all_edge_overlaps(g, measure)) {
        sum += rec.value.value;
    }
    return sum / static_cast<double>(g.edge_count());
}

} // namespace netoverlap
