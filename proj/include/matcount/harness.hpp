#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matcount/asymptotics.hpp"
#include "matcount/exactcount.hpp"

// Campaign driver: sweeps over (n, X) grids with CSV output, theorem
// verification runs, cross-validation of the three counters, and timing.

namespace matcount {

// Range spec grammar: "a,b,c" | "start..end..step" | "start..end..*factor".
std::vector<i64> parse_range_spec(const std::string& spec);

struct SweepRow {
    u64 n = 1;
    i64 x = 1;
    CountMethod method = CountMethod::lattice;
    u64 count = 0;
    double main_term = 0;
    double error = 0;             // count - main_term
    double normalized_error = 0;  // error / (sigma0(n)*X*max(log X,1) + n)
    double seconds = 0;
};

struct CampaignConfig {
    std::vector<i64> n_values;
    std::vector<i64> x_values;
    CountMethod method = CountMethod::lattice;
    u64 seed = 0;  // reserved for randomized campaigns
    std::string output_path;  // empty: no CSV
};

// Header: n,X,method,count,main_term,error,normalized_error,seconds
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(const std::string& path);

// One row per (n, X), sorted; CSV written atomically when configured.
std::vector<SweepRow> run_sweep(const CampaignConfig& config);

SweepRow sweep_point(u64 n, i64 x, CountMethod method);

struct Thm2Row {
    u64 p = 0;
    u64 n = 0;  // p^k
    i64 x = 0;  // floor_sqrt(n)
    u64 exact = 0;
    double predicted = 0;
    double residual = 0;    // exact - predicted
    double normalized = 0;  // residual / (p^{k/2} * log(p^k))
};

struct Thm2Report {
    int k = 1;
    std::vector<Thm2Row> rows;
    double max_abs_normalized = 0;
    double mean_abs_normalized = 0;
    double mean_ratio = 0;  // mean of exact/predicted
};

// Every stride-th prime in [p_min, p_max]; throws on an empty range.
Thm2Report verify_thm2(u64 p_min, u64 p_max, u64 stride, int k,
                       const std::string& csv_path = "");

struct CrossvalReport {
    bool ok = true;
    u64 checked = 0;
    // first divergence, when !ok:
    u64 n = 0;
    i64 x = 0;
    std::string detail;
};

using CounterFn = std::function<u64(i64, i64)>;

// Asserts oracle = lattice = divisor plus both decomposition identities on
// the full grid {1..n_max} x {1..x_max}.  The oracle is injectable so a
// corrupted counter can be exercised in tests.
CrossvalReport run_crossval(u64 n_max, i64 x_max,
                            const CounterFn& oracle_fn = nullptr);

struct BenchRow {
    i64 x = 0;
    std::optional<double> oracle_seconds;  // absent above the oracle guard
    double lattice_seconds = 0;
    double divisor_seconds = 0;
};

std::vector<BenchRow> run_bench(u64 n, const std::vector<i64>& x_values,
                                const std::string& csv_path = "");

}  // namespace matcount
