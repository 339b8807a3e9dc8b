#include "qss/harness.hpp"

#include <chrono>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "qss/qpe.hpp"

namespace qss {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

bool wants_stage(const RunConfig& config, const std::string& stage) {
    for (const auto& s : config.trace_stages) {
        if (s == stage) return true;
    }
    return false;
}

std::string psi1_csv(const QuantumState& state) {
    std::ostringstream out;
    out << "index,r1,r2,re,im,prob\n";
    const auto& amps = state.amplitudes();
    for (std::uint64_t k = 0; k < state.dim(); ++k) {
        out << k << ',' << state.r1_of(k) << ',' << state.r2_of(k) << ','
            << amps[k].real() << ',' << amps[k].imag() << ',' << std::norm(amps[k])
            << '\n';
    }
    return out.str();
}

std::string aa_csv(const std::vector<AaTraceRow>& rows) {
    std::ostringstream out;
    out << "k,good_mass,analytic\n";
    for (const auto& row : rows) {
        out << row.k << ',' << row.good_mass << ',' << row.analytic << '\n';
    }
    return out.str();
}

}  // namespace

void RunConfig::validate() const {
    instance.validate();
    if (mode != AmplifyMode::ExactCount && mode != AmplifyMode::Blind) {
        throw std::invalid_argument("config: unknown mode");
    }
    if (retries < 1) throw std::invalid_argument("config: retries must be >= 1");
    if (repetitions < 1) throw std::invalid_argument("config: repetitions must be >= 1");
    if (output != "json" && output != "csv") {
        throw std::invalid_argument("config: output must be json or csv");
    }
    for (const auto& s : trace_stages) {
        if (s != "qpe" && s != "aa" && s != "max") {
            throw std::invalid_argument("config: unknown trace stage " + s);
        }
    }
}

json RunConfig::to_json() const {
    json j{
        {"set", instance.elements},
        {"target", instance.target},
        {"mode", mode == AmplifyMode::ExactCount ? "exact-count" : "blind"},
        {"retries", retries},
        {"seed", seed},
        {"reps", repetitions},
        {"output", output},
        {"trace", trace_stages},
        {"max_restarts", max_restarts},
    };
    if (t_override) j["t"] = *t_override;
    return j;
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig config;
    config.instance.elements = j.at("set").get<std::vector<std::uint64_t>>();
    config.instance.target = j.at("target").get<std::uint64_t>();
    if (j.contains("t")) config.t_override = j.at("t").get<int>();
    if (j.contains("mode")) {
        const auto m = j.at("mode").get<std::string>();
        if (m == "exact-count") {
            config.mode = AmplifyMode::ExactCount;
        } else if (m == "blind") {
            config.mode = AmplifyMode::Blind;
        } else {
            throw std::invalid_argument("config: unknown mode " + m);
        }
    }
    if (j.contains("retries")) config.retries = j.at("retries").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    return config;
}

GateCounts count_gates(const PreparationLog& log, int subset_bits) {
    GateCounts counts;
    for (const auto& op : log) {
        switch (op.kind) {
            case GateKind::Hadamard:
                (op.target >= subset_bits ? counts.hadamard_reg1 : counts.hadamard_reg2)++;
                break;
            case GateKind::ControlledDiagonalPower:
                ++counts.controlled_diagonal;
                break;
            case GateKind::ControlledPhase:
                ++counts.controlled_phase;
                break;
            case GateKind::Swap:
                ++counts.swap;
                break;
            case GateKind::PauliZ:
                break;
        }
    }
    return counts;
}

SolveReport solve(const RunConfig& config) {
    config.validate();
    SolveReport report;
    report.config = config;

    const ScaledInstance scaled = scale_instance(config.instance, config.t_override);
    report.t = scaled.phase_bits;
    Rng rng(config.seed);

    auto start = std::chrono::steady_clock::now();
    QpeResult qpe = run_qpe(scaled);
    report.timings.qpe_ms = ms_since(start);
    report.gate_counts = count_gates(qpe.log, scaled.n());
    if (wants_stage(config, "qpe")) report.traces.psi1_csv = psi1_csv(qpe.state);

    std::vector<AaTraceRow> aa_rows;
    start = std::chrono::steady_clock::now();
    AmplifyOutcome amp = amplify_good(qpe, scaled, scaled.scaled_target, config.mode, rng,
                                      config.max_restarts,
                                      wants_stage(config, "aa") ? &aa_rows : nullptr);
    report.timings.amplify_ms = ms_since(start);
    report.aa_iterations = amp.iterations;
    report.aa_restarts = amp.restarts;
    report.good_count = amp.summary.good_count;
    if (wants_stage(config, "aa")) report.traces.aa_csv = aa_csv(aa_rows);

    if (!amp.succeeded) {
        report.status = "restart-exhausted";
        return report;
    }

    std::ostringstream max_trace;
    max_trace << "i,p1,retries,bit\n";
    start = std::chrono::steady_clock::now();
    MaxSearchResult ms = find_max_phase(std::move(amp.state), config.retries, rng,
                                        [&](const QubitStep& step, const QuantumState&) {
                                            max_trace << step.position << ','
                                                      << step.p1_initial << ','
                                                      << step.retries_used << ','
                                                      << step.bit << '\n';
                                        });
    report.max_sum = ms.max_sum;
    report.phase_bits = ms.bits;
    for (const auto& step : ms.steps) report.per_qubit_retries.push_back(step.retries_used);
    std::vector<int> witness = decode_solution(ms, rng);
    report.timings.maxsearch_ms = ms_since(start);
    if (wants_stage(config, "max")) report.traces.maxsearch_csv = max_trace.str();

    std::uint64_t witness_sum = 0;
    for (int i : witness) witness_sum += config.instance.elements[i];
    if (witness_sum != ms.max_sum) {
        // impossible with exact phases; a collision here means a kernel bug
        report.status = "anomaly";
        report.witness = witness;
        return report;
    }

    report.witness = witness;
    report.decision =
        ms.max_sum == config.instance.target && verify(config.instance, witness);

    if (config.instance.n() <= config.oracle_cap) {
        const OracleAnswer oracle = brute_force(config.instance);
        report.oracle_agrees = oracle.decision == report.decision;
    }
    return report;
}

json SolveReport::to_json(bool include_timings) const {
    json j{
        {"version", kVersion},
        {"config", config.to_json()},
        {"status", status},
        {"decision", decision ? "yes" : "no"},
        {"max_sum", max_sum},
        {"witness", witness},
        {"phase_bits", phase_bits},
        {"t", t},
        {"gate_counts",
         {{"hadamard_reg1", gate_counts.hadamard_reg1},
          {"hadamard_reg2", gate_counts.hadamard_reg2},
          {"controlled_diagonal", gate_counts.controlled_diagonal},
          {"controlled_phase", gate_counts.controlled_phase},
          {"swap", gate_counts.swap},
          {"phase_type_total", gate_counts.phase_type_total()}}},
        {"aa", {{"iterations", aa_iterations}, {"restarts", aa_restarts}, {"good_count", good_count}}},
        {"per_qubit_retries", per_qubit_retries},
    };
    if (oracle_agrees) {
        j["oracle_agrees"] = *oracle_agrees;
    } else {
        j["oracle_agrees"] = nullptr;
    }
    if (include_timings) {
        j["timing_ms"] = {{"qpe", timings.qpe_ms},
                          {"amplify", timings.amplify_ms},
                          {"maxsearch", timings.maxsearch_ms}};
    }
    return j;
}

BatchReport batch(const RunConfig& base, std::istream& instances) {
    BatchReport agg;
    std::string line;
    double retries_sum = 0.0;
    double iter_sum = 0.0;
    std::uint64_t index = 0;
    while (std::getline(instances, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++agg.total;
        RunConfig config = base;
        try {
            const json j = json::parse(line);
            config.instance.elements = j.at("set").get<std::vector<std::uint64_t>>();
            config.instance.target = j.at("target").get<std::uint64_t>();
            config.t_override.reset();
            if (j.contains("t")) config.t_override = j.at("t").get<int>();
            config.seed = base.seed + index;
            config.trace_stages.clear();
            SolveReport report = solve(config);
            ++agg.processed;
            if (report.decision) ++agg.decisions_yes;
            if (report.oracle_agrees) {
                ++agg.oracle_checked;
                if (*report.oracle_agrees) ++agg.oracle_correct;
            }
            iter_sum += report.aa_iterations;
            for (int r : report.per_qubit_retries) retries_sum += r;
            agg.reports.push_back(std::move(report));
        } catch (const std::exception&) {
            ++agg.warnings;
        }
        ++index;
    }
    if (agg.oracle_checked > 0) {
        agg.success_rate =
            static_cast<double>(agg.oracle_correct) / static_cast<double>(agg.oracle_checked);
    }
    if (agg.processed > 0) {
        agg.mean_aa_iterations = iter_sum / agg.processed;
        agg.mean_retries = retries_sum / agg.processed;
    }
    return agg;
}

json BatchReport::to_json(bool include_timings) const {
    json runs = json::array();
    for (const auto& r : reports) runs.push_back(r.to_json(include_timings));
    return json{
        {"total", total},
        {"processed", processed},
        {"warnings", warnings},
        {"decisions_yes", decisions_yes},
        {"oracle_checked", oracle_checked},
        {"oracle_correct", oracle_correct},
        {"success_rate", success_rate},
        {"mean_aa_iterations", mean_aa_iterations},
        {"mean_retries", mean_retries},
        {"runs", runs},
    };
}

std::string BatchReport::to_csv() const {
    std::ostringstream out;
    out << "index,decision,max_sum,status,oracle_agrees,aa_iterations\n";
    int i = 0;
    for (const auto& r : reports) {
        out << i++ << ',' << (r.decision ? "yes" : "no") << ',' << r.max_sum << ','
            << r.status << ','
            << (r.oracle_agrees ? (*r.oracle_agrees ? "true" : "false") : "") << ','
            << r.aa_iterations << '\n';
    }
    return out.str();
}

BenchReport bench(int n_from, int n_to, int element_bits, std::uint64_t seed) {
    if (n_from < 1 || n_to < n_from || element_bits < 1 || element_bits > 16) {
        throw std::invalid_argument("bench: bad sweep parameters");
    }
    Rng rng(seed);
    BenchReport report;
    // one element list, grown by prefix, so the sweep is nested and the
    // per-stage gate counts are monotone in n
    std::uniform_int_distribution<std::uint64_t> element(
        1, (std::uint64_t{1} << element_bits) - 1);
    std::vector<std::uint64_t> elements;
    for (int i = 0; i < n_to; ++i) elements.push_back(element(rng));
    for (int n = n_from; n <= n_to; ++n) {
        RunConfig config;
        config.instance.elements.assign(elements.begin(), elements.begin() + n);
        std::uint64_t target = 0;
        for (int i = 0; i < n; ++i) {
            if (rng() & 1) target += elements[i];
        }
        config.instance.target = target;
        config.seed = rng();
        const auto start = std::chrono::steady_clock::now();
        SolveReport run = solve(config);
        BenchRow row{n, run.t, run.gate_counts, run.aa_iterations, ms_since(start),
                     run.timings};
        report.rows.push_back(row);
    }
    return report;
}

std::string BenchReport::to_csv() const {
    std::ostringstream out;
    out << "n,t,hadamard_reg1,hadamard_reg2,controlled_diagonal,controlled_phase,"
           "swap,phase_type_total,aa_iterations,qpe_ms,amplify_ms,maxsearch_ms,total_ms\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.t << ',' << r.gate_counts.hadamard_reg1 << ','
            << r.gate_counts.hadamard_reg2 << ',' << r.gate_counts.controlled_diagonal
            << ',' << r.gate_counts.controlled_phase << ',' << r.gate_counts.swap << ','
            << r.gate_counts.phase_type_total() << ',' << r.aa_iterations << ','
            << r.timings.qpe_ms << ',' << r.timings.amplify_ms << ','
            << r.timings.maxsearch_ms << ',' << r.total_ms << '\n';
    }
    return out.str();
}

}  // namespace qss
