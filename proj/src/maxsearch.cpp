#include "qss/maxsearch.hpp"

#include <stdexcept>
#include <utility>

namespace qss {

void conditional_amplify_bit(QuantumState& state, int qubit, const QuantumState& snapshot) {
    if (qubit < state.n()) {
        throw std::invalid_argument("maxsearch: qubit must belong to Register 1");
    }
    state.apply_pauli_z(qubit);
    state.reflect_about(snapshot);
}

MaxSearchResult find_max_phase(QuantumState psi2, int retries, Rng& rng,
                               const MaxSearchObserver& observer) {
    if (retries < 1) {
        throw std::invalid_argument("maxsearch: retries must be >= 1");
    }
    const int t = psi2.t();
    MaxSearchResult result{{}, 0, {}, std::move(psi2)};
    QuantumState& state = result.final_state;

    for (int i = 1; i <= t; ++i) {
        const int p = t - i;
        const int qubit = state.reg1_qubit(p);
        const double p1 = state.marginal_probability(qubit, 1);

        QubitStep step{i, qubit, p1, 0, 0, false};
        if (p1 < 1e-12) {
            // no |1> mass to amplify; G_i would be a no-op, accept 0 outright
            step.amplifier_noop = true;
        } else {
            const QuantumState snapshot = state;
            QuantumState amplified = snapshot;
            QuantumState attempt = snapshot;
            step.bit = attempt.measure_qubit(qubit, rng);
            while (step.bit == 0 && step.retries_used < retries) {
                conditional_amplify_bit(amplified, qubit, snapshot);
                ++step.retries_used;
                attempt = amplified;
                step.bit = attempt.measure_qubit(qubit, rng);
            }
            state = std::move(attempt);
        }
        result.max_sum |= static_cast<std::uint64_t>(step.bit) << p;
        result.bits.push_back(step.bit);
        result.steps.push_back(step);
        if (observer) observer(step, state);
    }
    return result;
}

std::vector<int> decode_solution(MaxSearchResult& result, Rng& rng) {
    QuantumState& state = result.final_state;
    std::vector<int> witness;
    for (int q = 0; q < state.n(); ++q) {
        if (state.measure_qubit(q, rng) == 1) witness.push_back(q);
    }
    return witness;
}

}  // namespace qss
