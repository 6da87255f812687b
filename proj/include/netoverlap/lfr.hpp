#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "netoverlap/graph.hpp"

namespace netoverlap {

/// Parameters of the synthetic benchmark generator: power-law degrees and
/// community sizes, planted communities, and two mixing parameters (mu_t for
/// the fraction of a node's edges leaving its community, mu_w for the
/// fraction of its total edge weight doing so).
struct LfrParams {
    std::size_t n = 0;        // node count
    double k_avg = 0.0;       // target average degree
    std::size_t k_max = 0;    // maximum degree
    std::size_t c_min = 0;    // community size bounds
    std::size_t c_max = 0;
    double mu_t = 0.0;        // topology mixing, in [0, 1)
    double mu_w = 0.0;        // weight mixing, in [0, 1)
    double tau1 = 2.0;        // degree power-law exponent
    double tau2 = 1.0;        // community-size power-law exponent
    double beta = 1.5;        // strength exponent: s_i = k_i^beta
    std::uint64_t seed = 0;

    friend bool operator==(const LfrParams&, const LfrParams&) = default;
};

// Throws InfeasibleParamsError unless
// 0 < k_avg <= k_max < n, 1 < c_min <= c_max <= n, mu_t and mu_w in [0, 1).
void validate_params(const LfrParams& params);

struct GeneratedNetwork {
    WeightedGraph graph;
    CommunityAssignment communities;
    LfrParams params;
};

// n degrees in [k_min, k_max] from a power law p(k) ~ k^(-tau1). The lower
// cutoff k_min is found by bisection so the sampler's expected value matches
// k_avg to within 2%; the sum is forced even by decrementing one maximal
// degree if needed. Throws InfeasibleParamsError when no cutoff in
// [1, k_max] reaches k_avg.
std::vector<std::size_t> sample_power_law_degrees(std::size_t n, double k_avg,
                                                  std::size_t k_max, double tau1,
                                                  std::mt19937_64& rng);

// Community sizes from a power law p(s) ~ s^(-tau2) on [c_min, c_max], drawn
// until they cover n nodes, then trimmed/redistributed so the total is
// exactly n with every size still within bounds.
std::vector<std::size_t> sample_community_sizes(std::size_t n, std::size_t c_min,
                                                std::size_t c_max, double tau2,
                                                std::mt19937_64& rng);

// Full pipeline: degrees and community sizes, node placement, configuration-
// model wiring of intra- and inter-community stubs with rewiring of
// self-loops/duplicates, then weight assignment targeting strength k_i^beta
// with external weight fraction mu_w. Deterministic given params.seed.
// Throws InfeasibleParamsError or GenerationFailedError.
GeneratedNetwork generate_lfr(const LfrParams& params);

// Mean over non-isolated nodes of (cross-community degree / degree).
double realized_mixing_topology(const GeneratedNetwork& net);

// Mean over non-isolated nodes of (cross-community strength / strength).
double realized_mixing_weights(const GeneratedNetwork& net);

// 2 * edge_count / node_count; 0 for an empty graph.
double realized_average_degree(const WeightedGraph& g);

// Size of the largest connected component divided by node count.
double largest_component_fraction(const WeightedGraph& g);

} // namespace netoverlap
