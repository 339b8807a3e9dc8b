#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qss/encoding.hpp"

namespace qss {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

enum class Register { Phase, Subset };

enum class GateKind {
    Hadamard,
    ControlledDiagonalPower,
    ControlledPhase,
    PauliZ,
    Swap,
};

struct GateOp {
    GateKind kind;
    int target = -1;
    int control = -1;
    double angle = 0.0;  // ControlledPhase
    int power_exp = 0;   // ControlledDiagonalPower: power = 2^power_exp
};

// Replaying a log from |0...0> reproduces the pre-measurement state.
using PreparationLog = std::vector<GateOp>;

// Normalized amplitude vector over t+n qubits.
//
// Basis index layout: k = (r1 << n) | r2. Register-1 bit of weight 2^p lives
// at global qubit n+p; the readout b_1..b_t is most-significant-first, so b_1
// is qubit n+t-1. Register 2 occupies qubits 0..n-1 and holds the subset
// index.
class QuantumState {
public:
    static constexpr int kDefaultMaxQubits = 24;

    // Width cap, overridable through the QSS_MAX_QUBITS environment variable.
    static int max_qubits();

    QuantumState(int phase_bits, int subset_bits);

    // Normalizes the given vector; throws on size mismatch or zero norm.
    static QuantumState from_amplitudes(int phase_bits, int subset_bits,
                                        std::vector<Amplitude> amps);

    int t() const { return t_; }
    int n() const { return n_; }
    int width() const { return t_ + n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude amplitude(std::size_t k) const { return amps_.at(k); }

    int reg1_qubit(int p) const { return n_ + p; }  // weight 2^p in r1
    std::uint64_t r1_of(std::uint64_t k) const { return k >> n_; }
    std::uint64_t r2_of(std::uint64_t k) const { return k & ((std::uint64_t{1} << n_) - 1); }
    std::uint64_t reg1_mask() const { return (dim() - 1) & ~((std::uint64_t{1} << n_) - 1); }
    std::uint64_t reg2_mask() const { return (std::uint64_t{1} << n_) - 1; }

    void apply_hadamard(int qubit);
    void apply_pauli_z(int qubit);
    void apply_swap(int qubit_a, int qubit_b);
    // Phase e^{i*angle} on basis states with both control and target set.
    void apply_controlled_phase(int control, int target, double angle);
    // Phase kickback: amplitudes with the control bit set pick up
    // e^{2*pi*i*power*phi_{r2}}; power must be 2^j, 0 <= j < t.
    void apply_controlled_diagonal_power(int control, const DiagonalUnitary& diag,
                                         std::uint64_t power);
    // Exact inverse QFT over Register 1, output MSB-first.
    void apply_inverse_qft();
    void apply_qft();

    // Born-rule sample with collapse and renormalization.
    int measure_qubit(int qubit, Rng& rng);

    // Negates amplitudes of basis indices satisfying the predicate.
    template <class Pred>
    void phase_flip_if(Pred pred) {
        for (std::uint64_t k = 0; k < dim(); ++k) {
            if (pred(k)) amps_[k] = -amps_[k];
        }
    }

    // Negates amplitudes whose masked bits are all zero (I - 2|0><0| on the
    // masked register).
    void reflect_zero(std::uint64_t mask);
    // psi <- 2<ref|psi> ref - psi.
    void reflect_about(const QuantumState& reference);

    double marginal_probability(int qubit, int bit_value) const;
    std::vector<double> register_distribution(Register which) const;

    double norm() const;
    void renormalize();

private:
    void check_qubit(int qubit) const;

    int t_;
    int n_;
    std::vector<Amplitude> amps_;
};

// Gate sequence realizing the inverse QFT on Register 1 of a (t,n) state:
// t Hadamards, t(t-1)/2 controlled phases, floor(t/2) swaps.
std::vector<GateOp> inverse_qft_ops(int phase_bits, int subset_bits);

void apply_gate(QuantumState& state, const GateOp& op, const DiagonalUnitary* diag);
void apply_gate_inverse(QuantumState& state, const GateOp& op, const DiagonalUnitary* diag);

void apply_log(QuantumState& state, const PreparationLog& log, const DiagonalUnitary* diag);
// Applies the inverse of the logged circuit (reversed order, inverted gates).
void apply_log_inverse(QuantumState& state, const PreparationLog& log,
                       const DiagonalUnitary* diag);

}  // namespace qss
