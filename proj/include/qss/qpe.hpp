#pragma once

#include "qss/encoding.hpp"
#include "qss/statevector.hpp"

namespace qss {

// psi_1 together with the gate log that produced it from |0...0>.
struct QpeResult {
    QuantumState state;
    PreparationLog log;
    DiagonalUnitary diagonal;
};

// |0> on Register 1, uniform superposition over subset indices on Register 2.
QuantumState prepare_initial(int phase_bits, int subset_bits);

// Hadamards on Register 1, the controlled-diagonal power ladder, then the
// inverse QFT. With dyadic scaling each subset branch |j> ends up tagged with
// its exact integer sum in Register 1.
QpeResult run_qpe(const ScaledInstance& scaled);

}  // namespace qss
