#include <stdexcept>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qss/harness.hpp"

using namespace qss;

TEST_CASE("solve: oracle-confirmed yes instance") {
    RunConfig config;
    config.instance = {{3, 5, 8}, 8};
    config.seed = 42;
    const auto report = solve(config);
    CHECK(report.status == "ok");
    CHECK(report.decision);
    CHECK(report.max_sum == 8);
    CHECK(verify(config.instance, report.witness));
    REQUIRE(report.oracle_agrees.has_value());
    CHECK(*report.oracle_agrees);
}

TEST_CASE("solve: no instance reports the best reachable sum") {
    RunConfig config;
    config.instance = {{3, 5, 8}, 7};
    config.seed = 42;
    config.retries = 5;
    const auto report = solve(config);
    CHECK(!report.decision);
    CHECK(report.max_sum <= 5);
}

TEST_CASE("solve: target zero with the empty witness") {
    RunConfig config;
    config.instance = {{1}, 0};
    config.seed = 7;
    const auto report = solve(config);
    CHECK(report.decision);
    CHECK(report.witness.empty());
    CHECK(report.aa_iterations == 0);
}

TEST_CASE("identical config and seed give byte-identical reports") {
    RunConfig config;
    config.instance = {{3, 5, 8, 11}, 14};
    config.seed = 99;
    config.mode = AmplifyMode::Blind;
    const auto a = solve(config).to_json(false).dump();
    const auto b = solve(config).to_json(false).dump();
    CHECK(a == b);
}

TEST_CASE("config validation") {
    RunConfig config;
    config.instance = {{3, 5}, 3};
    config.retries = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.retries = 1;
    config.trace_stages = {"bogus"};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.trace_stages = {"qpe", "aa", "max"};
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("trace stages are populated on demand") {
    RunConfig config;
    config.instance = {{3, 5, 8}, 8};
    config.trace_stages = {"qpe", "aa", "max"};
    const auto report = solve(config);
    CHECK(report.traces.psi1_csv.starts_with("index,r1,r2,re,im,prob\n"));
    CHECK(report.traces.aa_csv.starts_with("k,good_mass,analytic\n"));
    CHECK(report.traces.maxsearch_csv.starts_with("i,p1,retries,bit\n"));
    // psi1 dump has one row per amplitude plus the header
    const auto rows = std::count(report.traces.psi1_csv.begin(),
                                 report.traces.psi1_csv.end(), '\n');
    CHECK(rows == 1 + (1 << (report.t + 3)));
}

TEST_CASE("batch") {
    const std::string path = "qss_batch_test.jsonl";
    {
        std::ofstream out(path);
        out << R"({"set": [3,5,8], "target": 8})" << '\n';
        out << R"({"set": [3,5,8], "target": 7})" << '\n';
        out << "not json\n";
        out << R"({"set": [1,2,4], "target": 6, "t": 5})" << '\n';
    }
    RunConfig base;
    base.seed = 5;
    std::ifstream in(path);
    const auto report = batch(base, in);
    std::remove(path.c_str());

    CHECK(report.total == 4);
    CHECK(report.processed == 3);
    CHECK(report.warnings == 1);
    CHECK(report.oracle_checked == 3);
    CHECK(report.success_rate == doctest::Approx(1.0));
    CHECK(report.reports[2].t == 5);

    std::istringstream empty("");
    const auto none = batch(base, empty);
    CHECK(none.total == 0);
    CHECK(none.processed == 0);
}

TEST_CASE("bench gate-count arithmetic") {
    const auto report = bench(2, 6, 4, 3);
    REQUIRE(report.rows.size() == 5);
    int prev_total = 0;
    for (const auto& row : report.rows) {
        const int t = row.t;
        CHECK(row.gate_counts.hadamard_reg2 == row.n);
        CHECK(row.gate_counts.hadamard_reg1 == 2 * t);
        CHECK(row.gate_counts.controlled_diagonal == t);
        CHECK(row.gate_counts.controlled_phase == t * (t - 1) / 2);
        CHECK(row.gate_counts.swap == t / 2);
        // t controlled-diagonal powers + t(t-1)/2 QFT rotations
        CHECK(row.gate_counts.phase_type_total() == t * (t + 1) / 2);
        CHECK(row.gate_counts.phase_type_total() >= prev_total);
        prev_total = row.gate_counts.phase_type_total();
    }
    CHECK_THROWS_AS(bench(3, 2, 4, 0), std::invalid_argument);
}
