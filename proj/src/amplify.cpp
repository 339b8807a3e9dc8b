#include "qss/amplify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qss {

GoodSetSummary count_good(const ScaledInstance& scaled, std::uint64_t target) {
    const std::uint64_t count = std::uint64_t{1} << scaled.n();
    GoodSetSummary summary;
    for (std::uint64_t j = 0; j < count; ++j) {
        if (phase_of(scaled, j) <= target) ++summary.good_count;
    }
    summary.bad_count = count - summary.good_count;
    summary.theta = std::asin(std::sqrt(static_cast<double>(summary.good_count) /
                                        static_cast<double>(count)));
    summary.optimal_k =
        summary.bad_count == 0
            ? 0
            : static_cast<int>(std::floor(std::numbers::pi / (4.0 * summary.theta)));
    return summary;
}

void oracle_flip_leq(QuantumState& state, std::uint64_t target) {
    state.phase_flip_if([&](std::uint64_t k) { return state.r1_of(k) <= target; });
}

double good_mass(const QuantumState& state, std::uint64_t target) {
    double mass = 0.0;
    const auto& amps = state.amplitudes();
    for (std::uint64_t k = 0; k < state.dim(); ++k) {
        if (state.r1_of(k) <= target) mass += std::norm(amps[k]);
    }
    return mass;
}

void diffusion(QuantumState& state, const QuantumState& psi1) {
    state.reflect_about(psi1);
}

void grover_iteration(QuantumState& state, std::uint64_t target, const QuantumState& psi1) {
    oracle_flip_leq(state, target);
    diffusion(state, psi1);
}

namespace {

std::uint64_t measure_register1(QuantumState& state, Rng& rng) {
    std::uint64_t value = 0;
    for (int p = state.t() - 1; p >= 0; --p) {
        const int bit = state.measure_qubit(state.reg1_qubit(p), rng);
        value |= static_cast<std::uint64_t>(bit) << p;
    }
    return value;
}

void project_good(QuantumState& state, std::uint64_t target) {
    auto amps = state.amplitudes();
    for (std::uint64_t k = 0; k < state.dim(); ++k) {
        if (state.r1_of(k) > target) amps[k] = Amplitude{0.0, 0.0};
    }
    state = QuantumState::from_amplitudes(state.t(), state.n(), std::move(amps));
}

}  // namespace

AmplifyOutcome amplify_good(const QpeResult& qpe, const ScaledInstance& scaled,
                            std::uint64_t target, AmplifyMode mode, Rng& rng,
                            int max_restarts, std::vector<AaTraceRow>* trace) {
    const QuantumState& psi1 = qpe.state;
    AmplifyOutcome out{psi1, count_good(scaled, target)};
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    if (mode == AmplifyMode::ExactCount) {
        const double theta = out.summary.theta;
        if (trace) {
            trace->push_back({0, good_mass(out.state, target),
                              std::sin(theta) * std::sin(theta)});
        }
        for (int k = 1; k <= out.summary.optimal_k && out.summary.bad_count > 0; ++k) {
            grover_iteration(out.state, target, psi1);
            ++out.iterations;
            if (trace) {
                const double a = std::sin((2.0 * k + 1.0) * theta);
                trace->push_back({k, good_mass(out.state, target), a * a});
            }
        }
        // binary good/bad projective measurement; the pre-measurement state is
        // deterministic, so a failed outcome only consumes a restart
        const double p_good = good_mass(out.state, target);
        for (int attempt = 0; attempt <= max_restarts; ++attempt) {
            if (unif(rng) < p_good) {
                project_good(out.state, target);
                out.succeeded = true;
                break;
            }
            ++out.restarts;
        }
        out.good_mass = good_mass(out.state, target);
        return out;
    }

    // blind mode: BBHT-style schedule, no |L| knowledge
    std::uint64_t m = 1;
    while (out.restarts <= max_restarts) {
        std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
        const std::uint64_t k = pick(rng);
        QuantumState working = psi1;
        for (std::uint64_t i = 0; i < k; ++i) {
            grover_iteration(working, target, psi1);
        }
        out.iterations += static_cast<int>(k);
        const std::uint64_t r1 = measure_register1(working, rng);
        if (r1 <= target) {
            out.state = std::move(working);
            out.succeeded = true;
            out.good_mass = 1.0;
            return out;
        }
        ++out.restarts;
        m = (6 * m + 4) / 5;  // ceil(6m/5)
        const std::uint64_t limit = std::uint64_t{1} << scaled.n();
        if (m > limit) m = limit;
    }
    out.state = psi1;
    out.good_mass = good_mass(out.state, target);
    return out;
}

}  // namespace qss
