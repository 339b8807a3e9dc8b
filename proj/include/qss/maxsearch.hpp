#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qss/statevector.hpp"

namespace qss {

struct QubitStep {
    int position;        // 1-based, most significant first (b_i)
    int qubit;           // global qubit index
    double p1_initial;   // |1> probability before any amplification
    int retries_used;
    int bit;
    bool amplifier_noop;  // the |1> branch had (numerically) zero mass
};

struct MaxSearchResult {
    std::vector<int> bits;  // b_1..b_t
    std::uint64_t max_sum = 0;
    std::vector<QubitStep> steps;
    QuantumState final_state;
};

// One G_i: Z on the qubit (phase-marks |1>), then reflection about the
// snapshot taken after the previous accepted measurement. Applied to the
// snapshot state it rotates the |1> mass p to sin^2(3*asin(sqrt(p))).
void conditional_amplify_bit(QuantumState& state, int qubit, const QuantumState& snapshot);

// Called after each accepted bit with the step record and the collapsed state.
using MaxSearchObserver = std::function<void(const QubitStep&, const QuantumState&)>;

// Measures Register-1 qubits most-significant-first. A |0> outcome is retried
// up to `retries` times, each retry stacking one more G_i onto the
// pre-measurement snapshot before sampling again.
MaxSearchResult find_max_phase(QuantumState psi2, int retries, Rng& rng,
                               const MaxSearchObserver& observer = {});

// Measures Register 2 of the collapsed state; returns 0-based element indices.
std::vector<int> decode_solution(MaxSearchResult& result, Rng& rng);

}  // namespace qss
