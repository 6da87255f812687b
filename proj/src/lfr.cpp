#include "netoverlap/lfr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "netoverlap/rng.hpp"

namespace netoverlap {

namespace {

// Floor for assigned edge weights; keeps external edges valid when mu_w = 0.
constexpr double kMinEdgeWeight = 1e-12;
constexpr int kPlacementPasses = 100;
constexpr int kBisectionIters = 200;

// Samples integers from a power law p(k) ~ k^(-tau) on [floor(lo), hi] by
// flooring a continuous power-law draw on [lo, hi + 1). The continuous lower
// cutoff makes the expected value a continuous function of lo, which the
// degree sampler exploits via bisection.
class PowerLawIntSampler {
public:
    PowerLawIntSampler(double lo, std::size_t hi, double tau)
        : lo_(lo), hi_(hi), tau_(tau),
          g_lo_(anti(lo)), g_hi_(anti(static_cast<double>(hi) + 1.0)) {}

    std::size_t sample(std::mt19937_64& rng) const {
        double g = g_lo_ + uniform01(rng) * (g_hi_ - g_lo_);
        double x = anti_inv(g);
        auto k = static_cast<std::size_t>(std::floor(x));
        return std::clamp(k, static_cast<std::size_t>(std::floor(lo_)), hi_);
    }

    double expected_value() const {
        double total = g_hi_ - g_lo_;
        double e = 0.0;
        for (std::size_t k = static_cast<std::size_t>(std::floor(lo_)); k <= hi_; ++k) {
            double cell_lo = std::max(lo_, static_cast<double>(k));
            double cell_hi = static_cast<double>(k) + 1.0;
            if (cell_hi <= cell_lo) continue;
            e += static_cast<double>(k) * (anti(cell_hi) - anti(cell_lo)) / total;
        }
        return e;
    }

private:
    double anti(double x) const {
        return tau_ == 1.0 ? std::log(x) : std::pow(x, 1.0 - tau_) / (1.0 - tau_);
    }
    double anti_inv(double g) const {
        return tau_ == 1.0 ? std::exp(g) : std::pow(g * (1.0 - tau_), 1.0 / (1.0 - tau_));
    }

    double lo_;
    std::size_t hi_;
    double tau_;
    double g_lo_;
    double g_hi_;
};

void force_even_sum(std::vector<std::size_t>& degrees) {
    std::size_t sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
    if (sum % 2 == 0) return;
    auto it = std::max_element(degrees.begin(), degrees.end());
    --*it;
}

std::uint64_t pair_key(NodeId u, NodeId v) {
    NodeId lo = std::min(u, v);
    NodeId hi = std::max(u, v);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

struct StubEdge {
    NodeId u;
    NodeId v;
};

// Pairs up stubs configuration-model style, then repairs self-loops,
// duplicates, and edges rejected by `extra_bad` with random double-edge
// swaps. Unrepairable pairs are dropped after the attempt budget.
template <typename ExtraBad>
void wire_stubs(std::vector<NodeId> stubs, const ExtraBad& extra_bad,
                std::unordered_set<std::uint64_t>& used,
                std::vector<StubEdge>& out, std::mt19937_64& rng) {
    shuffle_in_place(stubs, rng);
    if (stubs.size() % 2 != 0) stubs.pop_back(); // callers keep this even

    std::vector<StubEdge> good;
    std::vector<StubEdge> bad;
    good.reserve(stubs.size() / 2);
    for (std::size_t s = 0; s + 1 < stubs.size(); s += 2) {
        NodeId u = stubs[s];
        NodeId v = stubs[s + 1];
        if (u != v && !extra_bad(u, v) && used.insert(pair_key(u, v)).second) {
            good.push_back({u, v});
        } else {
            bad.push_back({u, v});
        }
    }

    std::size_t attempts = 10 * (stubs.size() / 2);
    while (!bad.empty() && !good.empty() && attempts > 0) {
        --attempts;
        StubEdge b = bad.back();
        std::size_t idx = static_cast<std::size_t>(uniform_below(rng, good.size()));
        StubEdge partner = good[idx];
        if (uniform_below(rng, 2) == 1) std::swap(partner.u, partner.v);

        // propose (b.u, partner.v) and (partner.u, b.v)
        StubEdge e1{b.u, partner.v};
        StubEdge e2{partner.u, b.v};
        used.erase(pair_key(good[idx].u, good[idx].v));
        bool ok = e1.u != e1.v && !extra_bad(e1.u, e1.v) &&
                  used.insert(pair_key(e1.u, e1.v)).second;
        if (ok) {
            if (e2.u != e2.v && !extra_bad(e2.u, e2.v) &&
                used.insert(pair_key(e2.u, e2.v)).second) {
                good[idx] = e1;
                good.push_back(e2);
                bad.pop_back();
                continue;
            }
            used.erase(pair_key(e1.u, e1.v));
        }
        used.insert(pair_key(good[idx].u, good[idx].v)); // roll back
    }
    // remaining bad pairs are dropped, discarding both stubs

    out.insert(out.end(), good.begin(), good.end());
}

} // namespace

void validate_params(const LfrParams& p) {
    auto fail = [](const std::string& msg) { throw InfeasibleParamsError(msg); };
    if (!(p.k_avg > 0.0) || !std::isfinite(p.k_avg)) fail("k_avg must be positive");
    if (p.k_avg > static_cast<double>(p.k_max)) fail("k_avg must not exceed k_max");
    if (p.k_max >= p.n) fail("k_max must be smaller than n");
    if (p.c_min < 2) fail("c_min must be at least 2");
    if (p.c_min > p.c_max) fail("c_min must not exceed c_max");
    if (p.c_max > p.n) fail("c_max must not exceed n");
    if (!(p.mu_t >= 0.0 && p.mu_t < 1.0)) fail("mu_t must be in [0, 1)");
    if (!(p.mu_w >= 0.0 && p.mu_w < 1.0)) fail("mu_w must be in [0, 1)");
    if (!std::isfinite(p.tau1) || p.tau1 < 0.0) fail("tau1 must be finite and >= 0");
    if (!std::isfinite(p.tau2) || p.tau2 < 0.0) fail("tau2 must be finite and >= 0");
    if (!std::isfinite(p.beta) || p.beta <= 0.0) fail("beta must be positive");
}

std::vector<std::size_t> sample_power_law_degrees(std::size_t n, double k_avg,
                                                  std::size_t k_max, double tau1,
                                                  std::mt19937_64& rng) {
    if (!(k_avg > 0.0) || k_max == 0 || k_avg > static_cast<double>(k_max)) {
        throw InfeasibleParamsError("need 0 < k_avg <= k_max");
    }

    std::vector<std::size_t> degrees(n);
    if (k_avg == static_cast<double>(k_max)) {
        std::fill(degrees.begin(), degrees.end(), k_max); // distribution collapses
        force_even_sum(degrees);
        return degrees;
    }

    double floor_expectation = PowerLawIntSampler(1.0, k_max, tau1).expected_value();
    if (floor_expectation > k_avg * 1.02) {
        throw InfeasibleParamsError(
            "no lower degree cutoff in [1, k_max] reaches k_avg: minimum expected "
            "degree is " + std::to_string(floor_expectation));
    }

    // Expected value is continuous and nondecreasing in the lower cutoff.
    double lo = 1.0;
    double hi = static_cast<double>(k_max);
    for (int iter = 0; iter < kBisectionIters; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (PowerLawIntSampler(mid, k_max, tau1).expected_value() < k_avg) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double cutoff = 0.5 * (lo + hi);
    PowerLawIntSampler sampler(cutoff, k_max, tau1);
    double achieved = sampler.expected_value();
    if (std::abs(achieved - k_avg) > 0.02 * k_avg) {
        throw InfeasibleParamsError("degree cutoff search failed: expected degree " +
                                    std::to_string(achieved) + " vs requested " +
                                    std::to_string(k_avg));
    }

    for (std::size_t i = 0; i < n; ++i) degrees[i] = sampler.sample(rng);
    force_even_sum(degrees);
    return degrees;
}

std::vector<std::size_t> sample_community_sizes(std::size_t n, std::size_t c_min,
                                                std::size_t c_max, double tau2,
                                                std::mt19937_64& rng) {
    if (n < c_min) {
        throw InfeasibleParamsError("n = " + std::to_string(n) +
                                    " is smaller than c_min = " + std::to_string(c_min));
    }
    if (c_min == 0 || c_min > c_max) {
        throw InfeasibleParamsError("need 0 < c_min <= c_max");
    }

    PowerLawIntSampler sampler(static_cast<double>(c_min), c_max, tau2);
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    while (total < n) {
        std::size_t s = sampler.sample(rng);
        sizes.push_back(s);
        total += s;
    }

    std::size_t excess = total - n;
    if (excess > 0) {
        if (sizes.back() - excess >= c_min) {
            sizes.back() -= excess;
        } else {
            // The trimmed community would fall below c_min: drop it and grow
            // the earlier communities instead.
            std::size_t deficit = n - (total - sizes.back());
            sizes.pop_back();
            while (deficit > 0) {
                bool progressed = false;
                for (std::size_t& s : sizes) {
                    if (deficit == 0) break;
                    if (s < c_max) {
                        ++s;
                        --deficit;
                        progressed = true;
                    }
                }
                if (!progressed) {
                    throw InfeasibleParamsError(
                        "cannot split n = " + std::to_string(n) +
                        " into community sizes within [" + std::to_string(c_min) +
                        ", " + std::to_string(c_max) + "]");
                }
            }
        }
    }
    return sizes;
}

GeneratedNetwork generate_lfr(const LfrParams& params) {
    validate_params(params);
    std::mt19937_64 rng(params.seed);
    const std::size_t n = params.n;

    std::vector<std::size_t> degrees =
        sample_power_law_degrees(n, params.k_avg, params.k_max, params.tau1, rng);
    std::vector<std::size_t> sizes =
        sample_community_sizes(n, params.c_min, params.c_max, params.tau2, rng);
    const std::size_t n_comms = sizes.size();

    // Internal degree targets (round half to even); the remainder is external.
    std::vector<std::size_t> k_int(n), k_ext(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto target = static_cast<std::size_t>(
            std::nearbyint((1.0 - params.mu_t) * static_cast<double>(degrees[i])));
        k_int[i] = std::min(target, degrees[i]);
        k_ext[i] = degrees[i] - k_int[i];
    }

    // Place nodes so that every node's internal degree fits its community
    // (k_int <= size - 1). Greedy over nodes in decreasing k_int order with
    // random tie-breaking; full reshuffle on failure.
    std::vector<std::uint32_t> comm(n, 0);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    bool placed = false;
    for (int pass = 0; pass < kPlacementPasses && !placed; ++pass) {
        shuffle_in_place(order, rng);
        std::stable_sort(order.begin(), order.end(),
                         [&](NodeId a, NodeId b) { return k_int[a] > k_int[b]; });
        std::vector<std::size_t> capacity = sizes;
        std::vector<std::size_t> eligible;
        bool ok = true;
        for (NodeId i : order) {
            eligible.clear();
            for (std::size_t c = 0; c < n_comms; ++c) {
                if (capacity[c] > 0 && sizes[c] - 1 >= k_int[i]) eligible.push_back(c);
            }
            if (eligible.empty()) {
                ok = false;
                break;
            }
            std::size_t c = eligible[uniform_below(rng, eligible.size())];
            comm[i] = static_cast<std::uint32_t>(c);
            --capacity[c];
        }
        placed = ok;
    }
    if (!placed) {
        throw GenerationFailedError("could not place nodes into communities after " +
                                    std::to_string(kPlacementPasses) + " passes");
    }

    std::vector<std::vector<NodeId>> members(n_comms);
    for (std::size_t i = 0; i < n; ++i) members[comm[i]].push_back(static_cast<NodeId>(i));

    // Per-community internal stub parity: drop one stub from the largest
    // holder when odd. Same for the global external stub pool. A dropped
    // stub lowers that node's degree by one; it is not converted, so mu_t = 0
    // stays free of external edges.
    for (std::size_t c = 0; c < n_comms; ++c) {
        std::size_t sum = 0;
        for (NodeId i : members[c]) sum += k_int[i];
        if (sum % 2 == 0) continue;
        NodeId top = members[c].front();
        for (NodeId i : members[c]) {
            if (k_int[i] > k_int[top]) top = i;
        }
        --k_int[top];
    }
    std::size_t ext_sum = std::accumulate(k_ext.begin(), k_ext.end(), std::size_t{0});
    if (ext_sum % 2 != 0) {
        std::size_t top = std::distance(
            k_ext.begin(), std::max_element(k_ext.begin(), k_ext.end()));
        --k_ext[top];
    }

    std::unordered_set<std::uint64_t> used;
    std::vector<StubEdge> internal_edges, external_edges;

    auto never_bad = [](NodeId, NodeId) { return false; };
    for (std::size_t c = 0; c < n_comms; ++c) {
        std::vector<NodeId> stubs;
        for (NodeId i : members[c]) stubs.insert(stubs.end(), k_int[i], i);
        wire_stubs(std::move(stubs), never_bad, used, internal_edges, rng);
    }

    auto same_community = [&](NodeId u, NodeId v) { return comm[u] == comm[v]; };
    std::vector<NodeId> ext_stubs;
    for (std::size_t i = 0; i < n; ++i) {
        ext_stubs.insert(ext_stubs.end(), k_ext[i], static_cast<NodeId>(i));
    }
    wire_stubs(std::move(ext_stubs), same_community, used, external_edges, rng);

    // Weights: target strength s_i = k_i^beta, split (1 - mu_w) internal /
    // mu_w external, spread evenly over each node's realized stubs of that
    // class; an edge takes the mean of its endpoints' per-stub budgets.
    std::vector<std::size_t> int_real(n, 0), ext_real(n, 0);
    for (const StubEdge& e : internal_edges) {
        ++int_real[e.u];
        ++int_real[e.v];
    }
    for (const StubEdge& e : external_edges) {
        ++ext_real[e.u];
        ++ext_real[e.v];
    }
    std::vector<double> budget_int(n, 0.0), budget_ext(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = std::pow(static_cast<double>(int_real[i] + ext_real[i]), params.beta);
        if (int_real[i] > 0) {
            budget_int[i] = (1.0 - params.mu_w) * s / static_cast<double>(int_real[i]);
        }
        if (ext_real[i] > 0) {
            budget_ext[i] = params.mu_w * s / static_cast<double>(ext_real[i]);
        }
    }

    std::vector<WeightedEdge> edges;
    edges.reserve(internal_edges.size() + external_edges.size());
    for (const StubEdge& e : internal_edges) {
        double w = 0.5 * (budget_int[e.u] + budget_int[e.v]);
        edges.push_back({e.u, e.v, std::max(w, kMinEdgeWeight)});
    }
    for (const StubEdge& e : external_edges) {
        double w = 0.5 * (budget_ext[e.u] + budget_ext[e.v]);
        edges.push_back({e.u, e.v, std::max(w, kMinEdgeWeight)});
    }

    GeneratedNetwork net;
    net.graph = WeightedGraph::build(edges, n);
    net.communities.membership = std::move(comm);
    net.params = params;
    return net;
}

double realized_mixing_topology(const GeneratedNetwork& net) {
    const WeightedGraph& g = net.graph;
    const auto& comm = net.communities.membership;
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        auto nbrs = g.neighbors(static_cast<NodeId>(i));
        if (nbrs.empty()) continue;
        std::size_t external = 0;
        for (const Neighbor& nb : nbrs) {
            if (comm[nb.id] != comm[i]) ++external;
        }
        sum += static_cast<double>(external) / static_cast<double>(nbrs.size());
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

double realized_mixing_weights(const GeneratedNetwork& net) {
    const WeightedGraph& g = net.graph;
    const auto& comm = net.communities.membership;
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        auto nbrs = g.neighbors(static_cast<NodeId>(i));
        if (nbrs.empty()) continue;
        double total = 0.0, external = 0.0;
        for (const Neighbor& nb : nbrs) {
            total += nb.weight;
            if (comm[nb.id] != comm[i]) external += nb.weight;
        }
        sum += external / total;
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

double realized_average_degree(const WeightedGraph& g) {
    if (g.node_count() == 0) return 0.0;
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

double largest_component_fraction(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0.0;
    std::vector<bool> visited(n, false);
    std::vector<NodeId> stack;
    std::size_t best = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::size_t size = 0;
        visited[start] = true;
        stack.push_back(static_cast<NodeId>(start));
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            ++size;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (!visited[nb.id]) {
                    visited[nb.id] = true;
                    stack.push_back(nb.id);
                }
            }
        }
        best = std::max(best, size);
    }
    return static_cast<double>(best) / static_cast<double>(n);
}

} // namespace netoverlap
