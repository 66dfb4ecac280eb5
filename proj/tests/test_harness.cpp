#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "matcount/harness.hpp"

using namespace matcount;

namespace fs = std::filesystem;

namespace {

std::string tmp_path(const std::string& name) {
    return (fs::temp_directory_path() / name).string();
}

// CSV contents with the timing column blanked, for determinism checks.
std::string csv_without_seconds(const std::string& path) {
    std::ifstream in(path);
    std::string out, line;
    while (std::getline(in, line)) {
        auto pos = line.rfind(',');
        out += line.substr(0, pos);
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("parse_range_spec") {
    CHECK(parse_range_spec("1,5,9") == std::vector<i64>{1, 5, 9});
    CHECK(parse_range_spec("7") == std::vector<i64>{7});
    CHECK(parse_range_spec("2..10..2") == std::vector<i64>{2, 4, 6, 8, 10});
    CHECK(parse_range_spec("1..100..*4") == std::vector<i64>{1, 4, 16, 64});
    CHECK(parse_range_spec("3..3..1") == std::vector<i64>{3});
    CHECK(parse_range_spec("5..4..1").empty());
    CHECK_THROWS_AS(parse_range_spec("1..10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range_spec("1..10..0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range_spec("1..10..*1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range_spec("a,b"), std::invalid_argument);
}

TEST_CASE("sweep rows, CSV round trip and determinism") {
    CampaignConfig cfg;
    cfg.n_values = {6, 1};
    cfg.x_values = {4, 1, 16};
    cfg.method = CountMethod::lattice;
    cfg.output_path = tmp_path("sweep_a.csv");
    auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 6);
    // sorted by (n, X)
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK((rows[i - 1].n < rows[i].n ||
               (rows[i - 1].n == rows[i].n && rows[i - 1].x < rows[i].x)));
    }
    // n = 6, X = 1: main term 192/pi^2, count exact
    const auto& r61 = rows[3];
    CHECK(r61.n == 6);
    CHECK(r61.x == 1);
    CHECK(r61.main_term ==
          doctest::Approx(192.0 / (std::numbers::pi * std::numbers::pi)));
    CHECK(r61.count == count_lattice(6, 1));
    CHECK(r61.error == doctest::Approx(double(r61.count) - r61.main_term));

    auto parsed = read_sweep_csv(cfg.output_path);
    REQUIRE(parsed.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].n == rows[i].n);
        CHECK(parsed[i].x == rows[i].x);
        CHECK(parsed[i].count == rows[i].count);
        CHECK(parsed[i].main_term == rows[i].main_term);
        CHECK(parsed[i].error ==
              doctest::Approx(double(parsed[i].count) - parsed[i].main_term));
        double lg = std::max(std::log(double(parsed[i].x)), 1.0);
        double denom = double(sigma0(factorize(parsed[i].n))) *
                           double(parsed[i].x) * lg + double(parsed[i].n);
        CHECK(parsed[i].normalized_error ==
              doctest::Approx(parsed[i].error / denom));
    }

    cfg.output_path = tmp_path("sweep_b.csv");
    run_sweep(cfg);
    CHECK(csv_without_seconds(tmp_path("sweep_a.csv")) ==
          csv_without_seconds(tmp_path("sweep_b.csv")));
    fs::remove(tmp_path("sweep_a.csv"));
    fs::remove(tmp_path("sweep_b.csv"));
}

TEST_CASE("empty X list yields header-only CSV") {
    CampaignConfig cfg;
    cfg.n_values = {1};
    cfg.x_values = {};
    cfg.output_path = tmp_path("sweep_empty.csv");
    auto rows = run_sweep(cfg);
    CHECK(rows.empty());
    std::ifstream in(cfg.output_path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "n,X,method,count,main_term,error,normalized_error,seconds");
    CHECK(!std::getline(in, line));
    fs::remove(cfg.output_path);
}

TEST_CASE("sweep rejects unwritable output path") {
    CampaignConfig cfg;
    cfg.n_values = {1};
    cfg.x_values = {1};
    cfg.output_path = "/nonexistent-dir/out.csv";
    CHECK_THROWS(run_sweep(cfg));
}

TEST_CASE("verify_thm2") {
    auto rep = verify_thm2(5, 5, 1, 1);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].p == 5);
    CHECK(rep.rows[0].x == 2);
    CHECK(rep.rows[0].exact == count_lattice(5, 2));
    CHECK(rep.rows[0].predicted == doctest::Approx(4.3170).epsilon(1e-4));

    auto rep2 = verify_thm2(3, 3, 1, 2);
    REQUIRE(rep2.rows.size() == 1);
    CHECK(rep2.rows[0].n == 9);
    CHECK(rep2.rows[0].x == 3);
    CHECK(rep2.rows[0].exact == count_oracle(9, 3));

    CHECK_THROWS_AS(verify_thm2(24, 28, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm2(5, 50, 1, 3), std::invalid_argument);

    // ratio tends to 1 as p grows
    auto big = verify_thm2(5000, 20000, 20, 1);
    CHECK(big.mean_ratio == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("crossval passes on an honest grid") {
    auto rep = run_crossval(12, 6);
    CHECK(rep.ok);
    CHECK(rep.checked == 72);
    auto one = run_crossval(1, 1);
    CHECK(one.ok);
}

TEST_CASE("crossval reports an injected divergence") {
    auto bad = [](i64 n, i64 x) { return count_oracle(n, x) + 1; };
    auto rep = run_crossval(3, 3, bad);
    CHECK(!rep.ok);
    CHECK(rep.n == 1);
    CHECK(rep.x == 1);
    CHECK(rep.detail.find("divergence") != std::string::npos);
}

TEST_CASE("bench skips the oracle above its guard") {
    auto rows = run_bench(6, {4, 600});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].oracle_seconds.has_value());
    CHECK(!rows[1].oracle_seconds.has_value());
    CHECK(rows[1].lattice_seconds >= 0.0);
}
