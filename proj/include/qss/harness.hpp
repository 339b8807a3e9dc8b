#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qss/amplify.hpp"
#include "qss/classical.hpp"
#include "qss/encoding.hpp"
#include "qss/maxsearch.hpp"

namespace qss {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    ProblemInstance instance;
    std::optional<int> t_override;
    AmplifyMode mode = AmplifyMode::ExactCount;
    int retries = 3;
    std::uint64_t seed = 0;
    int repetitions = 1;
    std::string output = "json";  // json | csv
    std::vector<std::string> trace_stages;  // subset of {"qpe", "aa", "max"}
    int max_restarts = 64;
    int oracle_cap = 20;  // skip the brute-force cross-check above this n

    void validate() const;
    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

struct GateCounts {
    int hadamard_reg1 = 0;
    int hadamard_reg2 = 0;
    int controlled_diagonal = 0;
    int controlled_phase = 0;
    int swap = 0;

    int phase_type_total() const { return controlled_diagonal + controlled_phase; }
};

struct StageTimings {
    double qpe_ms = 0.0;
    double amplify_ms = 0.0;
    double maxsearch_ms = 0.0;
};

struct TraceBundle {
    std::string psi1_csv;       // stage "qpe"
    std::string aa_csv;         // stage "aa"
    std::string maxsearch_csv;  // stage "max"
};

struct SolveReport {
    RunConfig config;
    std::string status = "ok";  // ok | restart-exhausted | anomaly
    bool decision = false;
    std::uint64_t max_sum = 0;
    std::vector<int> witness;
    std::vector<int> phase_bits;
    int t = 0;
    GateCounts gate_counts;
    int aa_iterations = 0;
    int aa_restarts = 0;
    std::uint64_t good_count = 0;
    std::vector<int> per_qubit_retries;
    std::optional<bool> oracle_agrees;
    StageTimings timings;
    TraceBundle traces;

    // timings are excluded so identical config+seed gives identical bytes
    nlohmann::json to_json(bool include_timings = true) const;
};

SolveReport solve(const RunConfig& config);

struct BatchReport {
    int total = 0;
    int processed = 0;
    int warnings = 0;
    int decisions_yes = 0;
    int oracle_checked = 0;
    int oracle_correct = 0;
    double success_rate = 0.0;  // correct decisions / oracle-checked
    double mean_aa_iterations = 0.0;
    double mean_retries = 0.0;
    std::vector<SolveReport> reports;

    nlohmann::json to_json(bool include_timings = true) const;
    std::string to_csv() const;
};

// One JSON object per line: {"set": [...], "target": s, "t": optional}.
BatchReport batch(const RunConfig& base, std::istream& instances);

struct BenchRow {
    int n = 0;
    int t = 0;
    GateCounts gate_counts;
    int aa_iterations = 0;
    double total_ms = 0.0;
    StageTimings timings;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::string to_csv() const;
};

// Random instance per n with elements of the given bit width; reports gate
// counts (the poly(n) story) separately from 2^(t+n) wall-clock.
BenchReport bench(int n_from, int n_to, int element_bits, std::uint64_t seed);

GateCounts count_gates(const PreparationLog& log, int subset_bits);

}  // namespace qss
