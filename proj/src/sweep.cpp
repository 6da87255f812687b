#include "netoverlap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "netoverlap/edge_io.hpp"
#include "netoverlap/rng.hpp"

namespace netoverlap {

namespace {

// Runs fn(0..count-1) on up to `threads` workers. Tasks only write to their
// own slot of any shared buffer, so scheduling cannot affect results.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::max(1u, hw);
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct ReplicateResult {
    bool failed = false;
    std::vector<double> means; // aligned with config.measures
    double lcc = 0.0;
};

} // namespace

double SweepRow::mean_for(Measure m) const {
    for (const MeasureStats& s : stats) {
        if (s.measure == m) return s.mean;
    }
    throw Error("sweep row carries no '" + measure_name(m) + "' stats");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads) {
    if (config.grid.empty()) throw Error("sweep grid is empty");
    if (config.replicates < 1) throw Error("replicates must be >= 1");
    if (config.measures.empty()) throw Error("no measures selected");

    const std::size_t points = config.grid.size();
    const auto replicates = static_cast<std::size_t>(config.replicates);
    std::vector<ReplicateResult> results(points * replicates);

    parallel_for(points * replicates, threads, [&](std::size_t task) {
        LfrParams params = config.grid[task / replicates];
        params.seed = derive_seed(config.master_seed, task);
        ReplicateResult& r = results[task];
        GeneratedNetwork net;
        try {
            net = generate_lfr(params);
        } catch (const GenerationFailedError&) {
            r.failed = true;
            return;
        }
        r.means.reserve(config.measures.size());
        for (Measure m : config.measures) {
            r.means.push_back(mean_edge_overlap(net.graph, m));
        }
        r.lcc = largest_component_fraction(net.graph);
    });

    std::vector<SweepRow> rows;
    rows.reserve(points);
    for (std::size_t gi = 0; gi < points; ++gi) {
        SweepRow row;
        row.params = config.grid[gi];
        row.replicates_requested = config.replicates;

        std::vector<const ReplicateResult*> ok;
        for (std::size_t ri = 0; ri < replicates; ++ri) {
            const ReplicateResult& r = results[gi * replicates + ri];
            if (!r.failed) ok.push_back(&r);
        }
        std::size_t failures = replicates - ok.size();
        if (failures * 2 > replicates) {
            throw GenerationFailedError("grid point " + std::to_string(gi) + ": " +
                                        std::to_string(failures) + " of " +
                                        std::to_string(replicates) +
                                        " replicates failed to generate");
        }
        row.replicates_effective = static_cast<int>(ok.size());

        for (std::size_t mi = 0; mi < config.measures.size(); ++mi) {
            MeasureStats stats;
            stats.measure = config.measures[mi];
            double sum = 0.0;
            for (const ReplicateResult* r : ok) sum += r->means[mi];
            stats.mean = sum / static_cast<double>(ok.size());
            if (ok.size() >= 2) {
                double ss = 0.0;
                for (const ReplicateResult* r : ok) {
                    double d = r->means[mi] - stats.mean;
                    ss += d * d;
                }
                stats.stddev = std::sqrt(ss / static_cast<double>(ok.size() - 1));
            }
            row.stats.push_back(stats);
        }
        double lcc_sum = 0.0;
        for (const ReplicateResult* r : ok) lcc_sum += r->lcc;
        row.lcc_fraction = lcc_sum / static_cast<double>(ok.size());
        rows.push_back(std::move(row));
    }
    return rows;
}

LinearityReport linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw Error("linear_fit: size mismatch");
    if (x.size() < 3) {
        throw TooFewPointsError("need at least 3 points, got " + std::to_string(x.size()));
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }

    LinearityReport report;
    report.n_points = x.size();
    if (sxx <= 0.0 || syy <= 0.0) {
        // zero variance: correlation undefined, reported as 0
        report.degenerate = true;
        report.slope = sxx > 0.0 ? sxy / sxx : 0.0;
        report.intercept = my - report.slope * mx;
        return report;
    }
    report.slope = sxy / sxx;
    report.intercept = my - report.slope * mx;
    report.pearson_r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    return report;
}

LinearityReport linearity_check(const std::vector<SweepRow>& rows) {
    std::vector<double> x, y;
    x.reserve(rows.size());
    y.reserve(rows.size());
    for (const SweepRow& row : rows) {
        x.push_back(row.mean_for(Measure::kWeightedMinmax));
        y.push_back(row.mean_for(Measure::kWeightedRef));
    }
    return linear_fit(x, y);
}

std::vector<std::pair<Measure, double>> stability_check(const std::vector<SweepRow>& rows) {
    if (rows.size() < 2) {
        throw TooFewPointsError("need at least 2 rows, got " + std::to_string(rows.size()));
    }
    std::vector<std::pair<Measure, double>> ranges;
    for (const MeasureStats& s : rows.front().stats) {
        double lo = s.mean, hi = s.mean;
        for (const SweepRow& row : rows) {
            double v = row.mean_for(s.measure);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        ranges.emplace_back(s.measure, hi - lo);
    }
    return ranges;
}

std::vector<LfrParams> make_grid(const std::vector<std::size_t>& ns,
                                 const std::vector<double>& k_avgs,
                                 const std::vector<double>& mu_ts,
                                 const std::vector<double>& mu_ws,
                                 const LfrParams& base) {
    std::vector<LfrParams> grid;
    grid.reserve(ns.size() * k_avgs.size() * mu_ts.size() * mu_ws.size());
    for (std::size_t n : ns) {
        for (double k_avg : k_avgs) {
            for (double mu_t : mu_ts) {
                for (double mu_w : mu_ws) {
                    LfrParams p = base;
                    p.n = n;
                    p.k_avg = k_avg;
                    p.mu_t = mu_t;
                    p.mu_w = mu_w;
                    grid.push_back(p);
                }
            }
        }
    }
    return grid;
}

std::vector<LfrParams> default_sweep_grid() {
    LfrParams base;
    base.k_max = 50;
    base.c_min = 20;
    base.c_max = 100;
    return make_grid({250, 500, 1000}, {10.0, 20.0}, {0.3},
                     {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7}, base);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "n,k_avg,k_max,c_min,c_max,mu_t,mu_w,tau1,tau2,beta,replicates,"
           "measure,mean,std,lcc_fraction\n";
    for (const SweepRow& row : rows) {
        const LfrParams& p = row.params;
        for (const MeasureStats& s : row.stats) {
            out << p.n << ',' << format_double(p.k_avg) << ',' << p.k_max << ','
                << p.c_min << ',' << p.c_max << ',' << format_double(p.mu_t) << ','
                << format_double(p.mu_w) << ',' << format_double(p.tau1) << ','
                << format_double(p.tau2) << ',' << format_double(p.beta) << ','
                << row.replicates_effective << ',' << measure_name(s.measure) << ','
                << format_double(s.mean) << ',' << format_double(s.stddev) << ','
                << format_double(row.lcc_fraction) << '\n';
        }
    }
}

void write_linearity_csv(const LinearityReport& report, std::ostream& out) {
    out << "n_points,pearson_r,slope,intercept,degenerate\n";
    out << report.n_points << ',' << format_double(report.pearson_r) << ','
        << format_double(report.slope) << ',' << format_double(report.intercept) << ','
        << (report.degenerate ? "true" : "false") << '\n';
}

} // namespace netoverlap
