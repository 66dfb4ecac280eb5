#include "matcount/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace matcount {

namespace {

i64 parse_int(const std::string& s) {
    size_t pos = 0;
    i64 v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<i64> parse_range_spec(const std::string& spec) {
    std::vector<i64> out;
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) out.push_back(parse_int(tok));
        }
        return out;
    }
    auto dots2 = spec.find("..", dots + 2);
    if (dots2 == std::string::npos)
        throw std::invalid_argument("range spec needs start..end..step: " + spec);
    i64 start = parse_int(spec.substr(0, dots));
    i64 end = parse_int(spec.substr(dots + 2, dots2 - dots - 2));
    std::string step = spec.substr(dots2 + 2);
    if (step.empty()) throw std::invalid_argument("empty step in: " + spec);
    if (step[0] == '*') {
        i64 factor = parse_int(step.substr(1));
        if (factor < 2 || start < 1)
            throw std::invalid_argument("geometric spec needs factor >= 2 and start >= 1");
        for (i64 v = start; v <= end; v *= factor) out.push_back(v);
    } else {
        i64 stride = parse_int(step);
        if (stride < 1) throw std::invalid_argument("step must be >= 1");
        for (i64 v = start; v <= end; v += stride) out.push_back(v);
    }
    return out;
}

static const char* kSweepHeader =
    "n,X,method,count,main_term,error,normalized_error,seconds";

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << kSweepHeader << "\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.x << ',' << method_name(r.method) << ','
                << r.count << ',' << fmt_double(r.main_term) << ','
                << fmt_double(r.error) << ',' << fmt_double(r.normalized_error)
                << ',' << fmt_double(r.seconds) << "\n";
        }
        if (!out) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("write failed for " + tmp);
        }
    }
    std::filesystem::rename(tmp, path);
}

std::vector<SweepRow> read_sweep_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != kSweepHeader)
        throw std::runtime_error("bad CSV header in " + path);
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string f[8];
        for (auto& fld : f)
            if (!std::getline(ss, fld, ','))
                throw std::runtime_error("short CSV row: " + line);
        SweepRow r;
        r.n = u64(parse_int(f[0]));
        r.x = parse_int(f[1]);
        r.method = method_from_name(f[2]);
        r.count = u64(parse_int(f[3]));
        r.main_term = std::stod(f[4]);
        r.error = std::stod(f[5]);
        r.normalized_error = std::stod(f[6]);
        r.seconds = std::stod(f[7]);
        rows.push_back(r);
    }
    return rows;
}

SweepRow sweep_point(u64 n, i64 x, CountMethod method) {
    CountResult res = run_query({i64(n), x, method});
    SweepRow row;
    row.n = n;
    row.x = x;
    row.method = method;
    row.count = res.count;
    row.main_term = main_term_thm1(n, double(x));
    row.error = double(res.count) - row.main_term;
    double lg = std::max(std::log(double(x)), 1.0);
    double denom = double(sigma0(factorize(n))) * double(x) * lg + double(n);
    row.normalized_error = row.error / denom;
    row.seconds = res.elapsed_seconds;
    return row;
}

std::vector<SweepRow> run_sweep(const CampaignConfig& config) {
    std::vector<SweepRow> rows;
    for (i64 n : config.n_values) {
        if (n < 1) throw std::invalid_argument("sweep: n must be >= 1");
        for (i64 x : config.x_values) {
            rows.push_back(sweep_point(u64(n), x, config.method));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.n != b.n ? a.n < b.n : a.x < b.x;
    });
    if (!config.output_path.empty()) write_sweep_csv(config.output_path, rows);
    return rows;
}

Thm2Report verify_thm2(u64 p_min, u64 p_max, u64 stride, int k,
                       const std::string& csv_path) {
    if (k != 1 && k != 2)
        throw std::invalid_argument("verify_thm2: k must be 1 or 2");
    if (stride < 1) throw std::invalid_argument("verify_thm2: stride >= 1");
    auto primes = primes_up_to(p_max);
    std::vector<u64> sample;
    u64 idx = 0;
    for (u64 p : primes) {
        if (p < p_min) continue;
        if (idx++ % stride == 0) sample.push_back(p);
    }
    if (sample.empty())
        throw std::invalid_argument("verify_thm2: empty prime range");
    Thm2Report rep;
    rep.k = k;
    double sum_abs = 0, sum_ratio = 0;
    for (u64 p : sample) {
        Thm2Row row;
        row.p = p;
        row.n = k == 1 ? p : p * p;
        row.x = i64(floor_sqrt(row.n));
        row.exact = count_lattice(i64(row.n), row.x);
        row.predicted = main_term_thm2(p, k);
        row.residual = double(row.exact) - row.predicted;
        double scale = std::pow(double(p), k / 2.0) * std::log(double(row.n));
        row.normalized = row.residual / scale;
        rep.max_abs_normalized =
            std::max(rep.max_abs_normalized, std::abs(row.normalized));
        sum_abs += std::abs(row.normalized);
        sum_ratio += double(row.exact) / row.predicted;
        rep.rows.push_back(row);
    }
    rep.mean_abs_normalized = sum_abs / double(rep.rows.size());
    rep.mean_ratio = sum_ratio / double(rep.rows.size());
    if (!csv_path.empty()) {
        std::string tmp = csv_path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + tmp);
            out << "p,n,X,exact,predicted,residual,normalized\n";
            for (const auto& r : rep.rows) {
                out << r.p << ',' << r.n << ',' << r.x << ',' << r.exact << ','
                    << fmt_double(r.predicted) << ',' << fmt_double(r.residual)
                    << ',' << fmt_double(r.normalized) << "\n";
            }
        }
        std::filesystem::rename(tmp, csv_path);
    }
    return rep;
}

CrossvalReport run_crossval(u64 n_max, i64 x_max, const CounterFn& oracle_fn) {
    if (x_max > kOracleMaxX)
        throw std::invalid_argument("crossval: x_max exceeds oracle guard");
    CounterFn oracle = oracle_fn
        ? oracle_fn
        : [](i64 n, i64 x) { return count_oracle(n, x); };
    CrossvalReport rep;
    for (u64 n = 1; n <= n_max; ++n) {
        auto divs = divisors(factorize(n));
        for (i64 x = 1; x <= x_max; ++x) {
            u64 o = oracle(i64(n), x);
            u64 l = count_lattice(i64(n), x);
            u64 d = count_divisor(i64(n), x);
            u64 sleq = count_sleq(i64(n), x);
            u64 seq = count_seq(i64(n), x);
            u64 sd_sum = 0;
            for (u64 dd : divs) sd_sum += count_sd(n, x, dd);
            ++rep.checked;
            std::string why;
            if (o != l || o != d)
                why = "counter divergence: oracle=" + std::to_string(o) +
                      " lattice=" + std::to_string(l) +
                      " divisor=" + std::to_string(d);
            else if (sd_sum != sleq)
                why = "sum of S_d = " + std::to_string(sd_sum) +
                      " != S_leq = " + std::to_string(sleq);
            else if (2 * sleq - seq != l)
                why = "2*S_leq - S_eq = " + std::to_string(2 * sleq - seq) +
                      " != S = " + std::to_string(l);
            if (!why.empty()) {
                rep.ok = false;
                rep.n = n;
                rep.x = x;
                rep.detail = why;
                return rep;
            }
        }
    }
    return rep;
}

std::vector<BenchRow> run_bench(u64 n, const std::vector<i64>& x_values,
                                const std::string& csv_path) {
    std::vector<BenchRow> rows;
    for (i64 x : x_values) {
        BenchRow row;
        row.x = x;
        if (x <= kOracleMaxX) {
            row.oracle_seconds =
                run_query({i64(n), x, CountMethod::oracle}).elapsed_seconds;
        }
        row.lattice_seconds =
            run_query({i64(n), x, CountMethod::lattice}).elapsed_seconds;
        row.divisor_seconds =
            run_query({i64(n), x, CountMethod::divisor}).elapsed_seconds;
        rows.push_back(row);
    }
    if (!csv_path.empty()) {
        std::string tmp = csv_path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + tmp);
            out << "X,oracle_seconds,lattice_seconds,divisor_seconds\n";
            for (const auto& r : rows) {
                out << r.x << ',';
                if (r.oracle_seconds)
                    out << fmt_double(*r.oracle_seconds);
                else
                    out << "skipped";
                out << ',' << fmt_double(r.lattice_seconds) << ','
                    << fmt_double(r.divisor_seconds) << "\n";
            }
        }
        std::filesystem::rename(tmp, csv_path);
    }
    return rows;
}

}  // namespace matcount
