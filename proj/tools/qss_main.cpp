#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qss/harness.hpp"

namespace {

using qss::AmplifyMode;
using qss::RunConfig;

struct CommonFlags {
    std::vector<std::uint64_t> set;
    std::uint64_t target = 0;
    int t_bits = 0;
    std::string mode = "exact-count";
    int retries = 3;
    std::uint64_t seed = 0;
    int reps = 1;
    std::string output = "json";
    std::string trace;
    int max_restarts = 64;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool need_instance) {
    auto* set_opt =
        cmd->add_option("--set", flags.set, "comma-separated elements, e.g. 3,5,8")
            ->delimiter(',');
    auto* target_opt = cmd->add_option("--target", flags.target, "target sum s");
    if (need_instance) {
        set_opt->required();
        target_opt->required();
    }
    cmd->add_option("--t-bits", flags.t_bits, "override the phase-register width t");
    cmd->add_option("--mode", flags.mode, "exact-count | blind")
        ->check(CLI::IsMember({"exact-count", "blind"}));
    cmd->add_option("--retries", flags.retries, "max-search retries per qubit");
    cmd->add_option("--seed", flags.seed, "RNG seed");
    cmd->add_option("--reps", flags.reps, "repetitions (seed, seed+1, ...)");
    cmd->add_option("--output", flags.output, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--trace", flags.trace, "stages to trace: qpe,aa,max");
    cmd->add_option("--max-restarts", flags.max_restarts, "amplification restart cap");
}

RunConfig make_config(const CommonFlags& flags) {
    RunConfig config;
    config.instance.elements = flags.set;
    config.instance.target = flags.target;
    if (flags.t_bits > 0) config.t_override = flags.t_bits;
    config.mode = flags.mode == "blind" ? AmplifyMode::Blind : AmplifyMode::ExactCount;
    config.retries = flags.retries;
    config.seed = flags.seed;
    config.repetitions = flags.reps;
    config.output = flags.output;
    config.max_restarts = flags.max_restarts;
    std::stringstream stages(flags.trace);
    std::string stage;
    while (std::getline(stages, stage, ',')) {
        if (!stage.empty()) config.trace_stages.push_back(stage);
    }
    return config;
}

int run_solve(const CommonFlags& flags) {
    RunConfig config = make_config(flags);
    config.validate();
    int exit_code = 0;
    nlohmann::json runs = nlohmann::json::array();
    std::ostringstream csv;
    csv << "rep,decision,max_sum,status,oracle_agrees,aa_iterations\n";
    for (int rep = 0; rep < config.repetitions; ++rep) {
        RunConfig run_config = config;
        run_config.seed = config.seed + rep;
        const qss::SolveReport report = qss::solve(run_config);
        if (report.status == "restart-exhausted") exit_code = 1;
        runs.push_back(report.to_json());
        csv << rep << ',' << (report.decision ? "yes" : "no") << ',' << report.max_sum
            << ',' << report.status << ','
            << (report.oracle_agrees ? (*report.oracle_agrees ? "true" : "false") : "")
            << ',' << report.aa_iterations << '\n';
    }
    if (config.output == "csv") {
        std::cout << csv.str();
    } else if (config.repetitions == 1) {
        std::cout << runs[0].dump(2) << '\n';
    } else {
        std::cout << runs.dump(2) << '\n';
    }
    return exit_code;
}

int run_oracle(const CommonFlags& flags, const std::string& method) {
    qss::ProblemInstance instance{flags.set, flags.target};
    const qss::OracleAnswer answer =
        method == "dp" ? qss::dp_solve(instance) : qss::brute_force(instance);
    nlohmann::json j{
        {"decision", answer.decision ? "yes" : "no"},
        {"max_reachable_leq_target", answer.max_reachable},
        {"good_count", answer.good_count},
    };
    if (answer.witness) {
        j["witness"] = *answer.witness;
    } else {
        j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_batch(const CommonFlags& flags, const std::string& file) {
    RunConfig base = make_config(flags);
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open instance file " << file << '\n';
        return 2;
    }
    const qss::BatchReport report = qss::batch(base, in);
    if (base.output == "csv") {
        std::cout << report.to_csv();
    } else {
        std::cout << report.to_json().dump(2) << '\n';
    }
    for (const auto& r : report.reports) {
        if (r.status == "restart-exhausted") return 1;
    }
    return 0;
}

int run_trace(const CommonFlags& flags) {
    RunConfig config = make_config(flags);
    if (config.trace_stages.empty()) {
        config.trace_stages = {"qpe", "aa", "max"};
    }
    config.validate();
    const qss::SolveReport report = qss::solve(config);
    for (const auto& stage : config.trace_stages) {
        std::cout << "# stage: " << stage << '\n';
        if (stage == "qpe") std::cout << report.traces.psi1_csv;
        if (stage == "aa") std::cout << report.traces.aa_csv;
        if (stage == "max") std::cout << report.traces.maxsearch_csv;
    }
    return report.status == "restart-exhausted" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum subset-sum pipeline (state-vector simulation)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qss::kVersion);

    CommonFlags flags;
    std::string oracle_method = "brute";
    std::string batch_file;
    int n_from = 2;
    int n_to = 8;
    int bit_width = 5;

    auto* solve_cmd = app.add_subcommand("solve", "run the full pipeline on one instance");
    add_common_flags(solve_cmd, flags, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "classical ground-truth answer");
    add_common_flags(oracle_cmd, flags, true);
    oracle_cmd->add_option("--method", oracle_method, "brute | dp")
        ->check(CLI::IsMember({"brute", "dp"}));

    auto* batch_cmd = app.add_subcommand("batch", "solve a JSON-lines instance file");
    add_common_flags(batch_cmd, flags, false);
    batch_cmd->add_option("file", batch_file, "instance file (one JSON object per line)")
        ->required();

    auto* bench_cmd = app.add_subcommand("bench", "sweep n, report gate counts and timings");
    bench_cmd->add_option("--n-from", n_from, "first n");
    bench_cmd->add_option("--n-to", n_to, "last n");
    bench_cmd->add_option("--bit-width", bit_width, "element bit width");
    bench_cmd->add_option("--seed", flags.seed, "RNG seed");

    auto* trace_cmd = app.add_subcommand("trace", "dump per-stage CSV traces");
    add_common_flags(trace_cmd, flags, true);
    trace_cmd->add_option("--stage", flags.trace, "stages: qpe,aa,max (alias of --trace)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(flags);
        if (oracle_cmd->parsed()) return run_oracle(flags, oracle_method);
        if (batch_cmd->parsed()) return run_batch(flags, batch_file);
        if (bench_cmd->parsed()) {
            std::cout << qss::bench(n_from, n_to, bit_width, flags.seed).to_csv();
            return 0;
        }
        if (trace_cmd->parsed()) return run_trace(flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
