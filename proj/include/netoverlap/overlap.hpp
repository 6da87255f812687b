#pragma once

#include <string>
#include <vector>

#include "netoverlap/graph.hpp"

namespace netoverlap {

// Result of an overlap measure. `degenerate` is set when the denominator was
// zero (both endpoints have no other neighbors); the value is then 0.
struct OverlapValue {
    double value = 0.0;
    bool degenerate = false;

    friend bool operator==(const OverlapValue&, const OverlapValue&) = default;
};

enum class Measure {
    kUnweighted,     // ratio of common to all other neighbors, weights ignored
    kWeightedRef,    // strength-normalized extension
    kWeightedMinmax, // min/max (weighted Jaccard) generalization
};

// "unweighted" | "weighted_ref" | "weighted_minmax"
std::string measure_name(Measure m);
// Accepts both underscore and hyphen spellings; throws Error on anything else.
Measure measure_from_name(const std::string& name);

// Classical overlap of edge (i, j): c / (k_i + k_j - 2 - c) where c is the
// number of common neighbors. Throws NotAnEdgeError if (i, j) is not an edge.
OverlapValue overlap_unweighted(const WeightedGraph& g, NodeId i, NodeId j);

// Strength-based weighted overlap:
// sum over common neighbors k of (w_ik + w_jk), divided by S_i + S_j - 2 w_ij.
OverlapValue overlap_weighted_ref(const WeightedGraph& g, NodeId i, NodeId j);

// Min/max generalization: sum of min(w_ik, w_jk) over common neighbors over
// sum of max(w_ik, w_jk) over all neighbors of i or j except i and j
// themselves, where a missing edge contributes weight 0. Equals
// overlap_unweighted when all weights are 1.
OverlapValue overlap_weighted_minmax(const WeightedGraph& g, NodeId i, NodeId j);

// Same quantity as overlap_weighted_minmax, derived through the graded-set
// algebra (size of intersection over size of the union restricted away from
// i and j). Independent computation path kept as a cross-check.
OverlapValue overlap_via_mappings(const WeightedGraph& g, NodeId i, NodeId j);

struct EdgeOverlapRecord {
    NodeId u = 0;
    NodeId v = 0;
    Measure measure = Measure::kUnweighted;
    OverlapValue value;

    friend bool operator==(const EdgeOverlapRecord&, const EdgeOverlapRecord&) = default;
};

// One record per edge in canonical (u < v, sorted) order.
std::vector<EdgeOverlapRecord> all_edge_overlaps(const WeightedGraph& g, Measure measure);

// Mean of the measure over all edges (degenerate edges contribute 0);
// 0 for an edgeless graph.
double mean_edge_overlap(const WeightedGraph& g, Measure measure);

} // namespace netoverlap
