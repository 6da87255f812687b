#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "netoverlap/lfr.hpp"
#include "netoverlap/overlap.hpp"

namespace netoverlap {

/// A parameter-sweep run: R generated networks per grid point, overlap
/// averaged per network and aggregated across replicates. Replicate seeds
/// derive from (master_seed, grid index, replicate index), so results are a
/// pure function of the config, whatever the thread count.
struct SweepConfig {
    std::vector<LfrParams> grid;
    int replicates = 10;
    std::uint64_t master_seed = 0;
    std::vector<Measure> measures = {Measure::kWeightedRef, Measure::kWeightedMinmax};
};

struct MeasureStats {
    Measure measure = Measure::kUnweighted;
    double mean = 0.0;   // mean over replicates of the per-network edge mean
    double stddev = 0.0; // sample std across replicates (0 when < 2)
};

struct SweepRow {
    LfrParams params; // the grid point (its seed field is not used)
    std::vector<MeasureStats> stats;
    double lcc_fraction = 0.0; // mean largest-component fraction
    int replicates_requested = 0;
    int replicates_effective = 0; // generation failures excluded

    // Mean for one measure; throws Error if the row does not carry it.
    double mean_for(Measure m) const;
};

struct LinearityReport {
    double pearson_r = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t n_points = 0;
    bool degenerate = false; // zero variance on either axis; r reported as 0
};

// Executes the sweep. threads <= 0 means hardware concurrency. A grid point
// fails (GenerationFailedError) only when more than half of its replicates
// fail to generate.
std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads = 0);

// Least-squares fit of y on x plus Pearson correlation.
// Throws TooFewPointsError when fewer than 3 points.
LinearityReport linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// Fit of the per-grid-point mean pairs (min/max measure on x, reference
// weighted measure on y). Rows must carry both measures.
LinearityReport linearity_check(const std::vector<SweepRow>& rows);

// (max - min) of the mean per measure across rows of a sweep that varies a
// single mixing parameter. Throws TooFewPointsError when fewer than 2 rows.
std::vector<std::pair<Measure, double>> stability_check(const std::vector<SweepRow>& rows);

// Cartesian product n x k_avg x mu_t x mu_w over `base` (order preserved).
std::vector<LfrParams> make_grid(const std::vector<std::size_t>& ns,
                                 const std::vector<double>& k_avgs,
                                 const std::vector<double>& mu_ts,
                                 const std::vector<double>& mu_ws,
                                 const LfrParams& base);

// Desk-scale default: n in {250, 500, 1000}, k_avg in {10, 20},
// mu_w in {0.1..0.7} at mu_t = 0.3, k_max = 50, communities in [20, 100].
std::vector<LfrParams> default_sweep_grid();

// CSV with header n,k_avg,k_max,c_min,c_max,mu_t,mu_w,tau1,tau2,beta,
// replicates,measure,mean,std,lcc_fraction; one row per (grid point, measure).
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

void write_linearity_csv(const LinearityReport& report, std::ostream& out);

} // namespace netoverlap
