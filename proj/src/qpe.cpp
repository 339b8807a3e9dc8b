#include "qss/qpe.hpp"

namespace qss {

QuantumState prepare_initial(int phase_bits, int subset_bits) {
    QuantumState state(phase_bits, subset_bits);
    for (int q = 0; q < subset_bits; ++q) {
        state.apply_hadamard(q);
    }
    return state;
}

QpeResult run_qpe(const ScaledInstance& scaled) {
    const int t = scaled.phase_bits;
    const int n = scaled.n();
    QpeResult result{QuantumState(t, n), {}, build_diagonal(scaled)};
    QuantumState& state = result.state;
    auto emit = [&](const GateOp& op) {
        apply_gate(state, op, &result.diagonal);
        result.log.push_back(op);
    };

    for (int q = 0; q < n; ++q) {
        emit({GateKind::Hadamard, q, -1, 0.0, 0});
    }
    for (int p = 0; p < t; ++p) {
        emit({GateKind::Hadamard, state.reg1_qubit(p), -1, 0.0, 0});
    }
    // the qubit of weight 2^j controls U^{2^j}
    for (int j = 0; j < t; ++j) {
        emit({GateKind::ControlledDiagonalPower, -1, state.reg1_qubit(j), 0.0, j});
    }
    for (const auto& op : inverse_qft_ops(t, n)) {
        emit(op);
    }
    return result;
}

}  // namespace qss
