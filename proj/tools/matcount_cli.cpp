#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "matcount/harness.hpp"
#include "matcount/pigeonhole.hpp"

// Exit codes: 0 success, 1 operational error, 2 validation failure.

namespace {

using namespace matcount;

int cmd_count(i64 n, i64 x, const std::string& method, bool force) {
    CountResult res = run_query({n, x, method_from_name(method)}, force);
    std::printf("n=%lld X=%lld method=%s count=%llu seconds=%.6f\n",
                (long long)n, (long long)x, method_name(res.query.method),
                (unsigned long long)res.count, res.elapsed_seconds);
    return 0;
}

int cmd_sweep(const std::string& n_spec, const std::string& x_spec,
              const std::string& method, const std::string& out) {
    CampaignConfig cfg;
    cfg.n_values = parse_range_spec(n_spec);
    cfg.x_values = parse_range_spec(x_spec);
    cfg.method = method_from_name(method);
    cfg.output_path = out;
    auto rows = run_sweep(cfg);
    std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
    return 0;
}

int cmd_verify_thm2(u64 p_min, u64 p_max, u64 stride, int k,
                    const std::string& out) {
    Thm2Report rep = verify_thm2(p_min, p_max, stride, k, out);
    std::printf("k=%d primes=%zu\n", rep.k, rep.rows.size());
    for (const auto& r : rep.rows) {
        std::printf("p=%llu n=%llu X=%lld exact=%llu predicted=%.3f "
                    "residual=%+.3f normalized=%+.4f\n",
                    (unsigned long long)r.p, (unsigned long long)r.n,
                    (long long)r.x, (unsigned long long)r.exact, r.predicted,
                    r.residual, r.normalized);
    }
    std::printf("max|normalized|=%.4f mean|normalized|=%.4f mean_ratio=%.4f\n",
                rep.max_abs_normalized, rep.mean_abs_normalized,
                rep.mean_ratio);
    return 0;
}

int cmd_crossval(u64 n_max, i64 x_max) {
    CrossvalReport rep = run_crossval(n_max, x_max);
    if (rep.ok) {
        std::printf("crossval OK: %llu grid points, all counters and "
                    "identities agree\n",
                    (unsigned long long)rep.checked);
        return 0;
    }
    std::fprintf(stderr, "crossval FAILED at n=%llu X=%lld: %s\n",
                 (unsigned long long)rep.n, (long long)rep.x,
                 rep.detail.c_str());
    return 2;
}

int cmd_bench(u64 n, const std::string& x_spec, const std::string& out) {
    auto rows = run_bench(n, parse_range_spec(x_spec), out);
    std::printf("X,oracle_seconds,lattice_seconds,divisor_seconds\n");
    for (const auto& r : rows) {
        if (r.oracle_seconds)
            std::printf("%lld,%.6f,%.6f,%.6f\n", (long long)r.x,
                        *r.oracle_seconds, r.lattice_seconds,
                        r.divisor_seconds);
        else
            std::printf("%lld,skipped,%.6f,%.6f\n", (long long)r.x,
                        r.lattice_seconds, r.divisor_seconds);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of 2x2 integer matrices with fixed "
                 "determinant and bounded entries"};
    app.require_subcommand(1);

    const std::string spec_help =
        "range spec: comma list 'a,b,c', arithmetic 'start..end..step', "
        "or geometric 'start..end..*factor'";

    i64 n = 1, x = 1;
    u64 un = 1, p_min = 2, p_max = 100, stride = 1, n_max = 10;
    i64 x_max = 10;
    int k = 1;
    std::string method = "lattice", n_spec, x_spec, out;
    bool force = false;

    auto* count = app.add_subcommand("count", "single exact count");
    count->add_option("--n", n, "determinant (nonzero)")->required();
    count->add_option("--x", x, "entry bound X >= 1")->required();
    count->add_option("--method", method, "oracle|lattice|divisor");
    count->add_flag("--force-oracle", force, "lift the X <= 512 oracle guard");

    auto* sweep = app.add_subcommand("sweep", "grid sweep with CSV output");
    sweep->add_option("--n-list", n_spec, spec_help)->required();
    sweep->add_option("--x-list", x_spec, spec_help)->required();
    sweep->add_option("--method", method, "oracle|lattice|divisor");
    sweep->add_option("--out", out, "CSV output path")->required();

    auto* thm2 = app.add_subcommand("verify-thm2",
                                    "compare exact counts at X = sqrt(n) "
                                    "against the prime / prime-square law");
    thm2->add_option("--p-min", p_min, "lowest prime")->required();
    thm2->add_option("--p-max", p_max, "highest prime")->required();
    thm2->add_option("--stride", stride, "take every stride-th prime");
    thm2->add_option("--k", k, "1 for n=p, 2 for n=p^2")->required();
    thm2->add_option("--out", out, "optional CSV output path");

    auto* crossval = app.add_subcommand(
        "crossval", "three-way counter agreement + decomposition identities");
    crossval->add_option("--n-max", n_max, "check n in 1..n_max")->required();
    crossval->add_option("--x-max", x_max, "check X in 1..x_max (<= 512)")
        ->required();

    auto* bench = app.add_subcommand("bench", "time each counter tier");
    bench->add_option("--n", un, "determinant")->required();
    bench->add_option("--x-list", x_spec, spec_help)->required();
    bench->add_option("--out", out, "optional CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count) return cmd_count(n, x, method, force);
        if (*sweep) return cmd_sweep(n_spec, x_spec, method, out);
        if (*thm2) return cmd_verify_thm2(p_min, p_max, stride, k, out);
        if (*crossval) return cmd_crossval(n_max, x_max);
        if (*bench) return cmd_bench(un, x_spec, out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
