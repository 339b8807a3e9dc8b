#include "qss/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qss {

int QuantumState::max_qubits() {
    static const int cap = [] {
        if (const char* env = std::getenv("QSS_MAX_QUBITS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return kDefaultMaxQubits;
    }();
    return cap;
}

QuantumState::QuantumState(int phase_bits, int subset_bits)
    : t_(phase_bits), n_(subset_bits) {
    if (t_ < 1 || n_ < 1) {
        throw std::invalid_argument("state: both registers need at least one qubit");
    }
    if (width() > max_qubits()) {
        throw std::invalid_argument("state: t+n = " + std::to_string(width()) +
                                    " exceeds qubit cap " + std::to_string(max_qubits()));
    }
    amps_.assign(std::size_t{1} << width(), Amplitude{0.0, 0.0});
    amps_[0] = Amplitude{1.0, 0.0};
}

QuantumState QuantumState::from_amplitudes(int phase_bits, int subset_bits,
                                           std::vector<Amplitude> amps) {
    QuantumState state(phase_bits, subset_bits);
    if (amps.size() != state.dim()) {
        throw std::invalid_argument("state: amplitude vector size mismatch");
    }
    state.amps_ = std::move(amps);
    const double nrm = state.norm();
    if (nrm < 1e-12) {
        throw std::invalid_argument("state: zero-norm amplitude vector");
    }
    for (auto& a : state.amps_) a /= nrm;
    return state;
}

void QuantumState::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= width()) {
        throw std::out_of_range("state: qubit index " + std::to_string(qubit) +
                                " out of range");
    }
}

void QuantumState::apply_hadamard(int qubit) {
    check_qubit(qubit);
    const std::uint64_t half = std::uint64_t{1} << qubit;
    const std::uint64_t stride = half << 1;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t base = 0; base < dim(); base += stride) {
        for (std::uint64_t i = 0; i < half; ++i) {
            const std::uint64_t k0 = base + i;
            const std::uint64_t k1 = k0 + half;
            const Amplitude a = amps_[k0];
            const Amplitude b = amps_[k1];
            amps_[k0] = (a + b) * inv_sqrt2;
            amps_[k1] = (a - b) * inv_sqrt2;
        }
    }
}

void QuantumState::apply_pauli_z(int qubit) {
    check_qubit(qubit);
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if (k & mask) amps_[k] = -amps_[k];
    }
}

void QuantumState::apply_swap(int qubit_a, int qubit_b) {
    check_qubit(qubit_a);
    check_qubit(qubit_b);
    if (qubit_a == qubit_b) return;
    const std::uint64_t ma = std::uint64_t{1} << qubit_a;
    const std::uint64_t mb = std::uint64_t{1} << qubit_b;
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if ((k & ma) && !(k & mb)) {
            std::swap(amps_[k], amps_[(k ^ ma) | mb]);
        }
    }
}

void QuantumState::apply_controlled_phase(int control, int target, double angle) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("state: control equals target");
    }
    const std::uint64_t mask = (std::uint64_t{1} << control) | (std::uint64_t{1} << target);
    const Amplitude factor = std::polar(1.0, angle);
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if ((k & mask) == mask) amps_[k] *= factor;
    }
}

void QuantumState::apply_controlled_diagonal_power(int control, const DiagonalUnitary& diag,
                                                   std::uint64_t power) {
    check_qubit(control);
    if (control < n_) {
        throw std::invalid_argument("state: control must be a Register-1 qubit");
    }
    if (!std::has_single_bit(power) || power >= (std::uint64_t{1} << t_)) {
        throw std::invalid_argument("state: power must be 2^j with 0 <= j < t");
    }
    if (diag.size() != (std::uint64_t{1} << n_) || diag.phase_bits != t_) {
        throw std::invalid_argument("state: diagonal does not match register widths");
    }
    const std::uint64_t denom = std::uint64_t{1} << t_;
    std::vector<Amplitude> factor(diag.size());
    for (std::uint64_t j = 0; j < diag.size(); ++j) {
        // exact modular reduction keeps the angle in [0, 2pi)
        const std::uint64_t num = (power * diag.numerators[j]) & (denom - 1);
        factor[j] = std::polar(1.0, 2.0 * std::numbers::pi *
                                        static_cast<double>(num) /
                                        static_cast<double>(denom));
    }
    const std::uint64_t cmask = std::uint64_t{1} << control;
    const std::uint64_t r2mask = reg2_mask();
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if (k & cmask) amps_[k] *= factor[k & r2mask];
    }
}

std::vector<GateOp> inverse_qft_ops(int phase_bits, int subset_bits) {
    const int t = phase_bits;
    const int n = subset_bits;
    std::vector<GateOp> ops;
    // bit-reversal first, then the reversed rotation ladder with negated angles
    for (int p = 0; p < t / 2; ++p) {
        ops.push_back({GateKind::Swap, n + p, n + (t - 1 - p), 0.0, 0});
    }
    for (int i = t - 1; i >= 0; --i) {
        for (int j = t - 1; j > i; --j) {
            const double angle = -2.0 * std::numbers::pi / static_cast<double>(1 << (j - i + 1));
            ops.push_back({GateKind::ControlledPhase, n + (t - 1 - i), n + (t - 1 - j), angle, 0});
        }
        ops.push_back({GateKind::Hadamard, n + (t - 1 - i), -1, 0.0, 0});
    }
    return ops;
}

void QuantumState::apply_inverse_qft() {
    for (const auto& op : inverse_qft_ops(t_, n_)) {
        apply_gate(*this, op, nullptr);
    }
}

void QuantumState::apply_qft() {
    const auto ops = inverse_qft_ops(t_, n_);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        apply_gate_inverse(*this, *it, nullptr);
    }
}

int QuantumState::measure_qubit(int qubit, Rng& rng) {
    check_qubit(qubit);
    const double p1 = marginal_probability(qubit, 1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int bit = unif(rng) < p1 ? 1 : 0;
    const double p_outcome = bit ? p1 : 1.0 - p1;
    if (p_outcome < 1e-15) {
        throw std::runtime_error("state: measured a zero-probability branch");
    }
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(p_outcome);
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if (static_cast<int>((k & mask) != 0) == bit) {
            amps_[k] *= scale;
        } else {
            amps_[k] = Amplitude{0.0, 0.0};
        }
    }
    return bit;
}

void QuantumState::reflect_zero(std::uint64_t mask) {
    if (mask == 0) {
        throw std::invalid_argument("state: reflect_zero needs a non-empty mask");
    }
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if ((k & mask) == 0) amps_[k] = -amps_[k];
    }
}

void QuantumState::reflect_about(const QuantumState& reference) {
    if (reference.dim() != dim() || reference.t_ != t_ || reference.n_ != n_) {
        throw std::invalid_argument("state: reflect_about dimension mismatch");
    }
    Amplitude inner{0.0, 0.0};
    for (std::uint64_t k = 0; k < dim(); ++k) {
        inner += std::conj(reference.amps_[k]) * amps_[k];
    }
    for (std::uint64_t k = 0; k < dim(); ++k) {
        amps_[k] = 2.0 * inner * reference.amps_[k] - amps_[k];
    }
}

double QuantumState::marginal_probability(int qubit, int bit_value) const {
    check_qubit(qubit);
    if (bit_value != 0 && bit_value != 1) {
        throw std::invalid_argument("state: bit value must be 0 or 1");
    }
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    double p = 0.0;
    for (std::uint64_t k = 0; k < dim(); ++k) {
        if (static_cast<int>((k & mask) != 0) == bit_value) p += std::norm(amps_[k]);
    }
    return p;
}

std::vector<double> QuantumState::register_distribution(Register which) const {
    const int bits = which == Register::Phase ? t_ : n_;
    std::vector<double> dist(std::size_t{1} << bits, 0.0);
    for (std::uint64_t k = 0; k < dim(); ++k) {
        const std::uint64_t v = which == Register::Phase ? r1_of(k) : r2_of(k);
        dist[v] += std::norm(amps_[k]);
    }
    return dist;
}

double QuantumState::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void QuantumState::renormalize() {
    const double nrm = norm();
    if (nrm < 1e-12) {
        throw std::runtime_error("state: cannot renormalize a zero-norm vector");
    }
    for (auto& a : amps_) a /= nrm;
}

void apply_gate(QuantumState& state, const GateOp& op, const DiagonalUnitary* diag) {
    switch (op.kind) {
        case GateKind::Hadamard:
            state.apply_hadamard(op.target);
            break;
        case GateKind::ControlledDiagonalPower:
            if (!diag) throw std::invalid_argument("apply_gate: missing diagonal");
            state.apply_controlled_diagonal_power(op.control, *diag,
                                                  std::uint64_t{1} << op.power_exp);
            break;
        case GateKind::ControlledPhase:
            state.apply_controlled_phase(op.control, op.target, op.angle);
            break;
        case GateKind::PauliZ:
            state.apply_pauli_z(op.target);
            break;
        case GateKind::Swap:
            state.apply_swap(op.target, op.control);
            break;
    }
}

void apply_gate_inverse(QuantumState& state, const GateOp& op, const DiagonalUnitary* diag) {
    switch (op.kind) {
        case GateKind::Hadamard:
        case GateKind::PauliZ:
        case GateKind::Swap:
            apply_gate(state, op, diag);
            break;
        case GateKind::ControlledPhase: {
            GateOp inv = op;
            inv.angle = -op.angle;
            apply_gate(state, inv, diag);
            break;
        }
        case GateKind::ControlledDiagonalPower: {
            if (!diag) throw std::invalid_argument("apply_gate_inverse: missing diagonal");
            // conjugate diagonal: negate every numerator mod 2^t
            DiagonalUnitary conj = *diag;
            const std::uint64_t denom = std::uint64_t{1} << diag->phase_bits;
            for (auto& num : conj.numerators) num = (denom - (num & (denom - 1))) & (denom - 1);
            state.apply_controlled_diagonal_power(op.control, conj,
                                                  std::uint64_t{1} << op.power_exp);
            break;
        }
    }
}

void apply_log(QuantumState& state, const PreparationLog& log, const DiagonalUnitary* diag) {
    for (const auto& op : log) apply_gate(state, op, diag);
}

void apply_log_inverse(QuantumState& state, const PreparationLog& log,
                       const DiagonalUnitary* diag) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        apply_gate_inverse(state, *it, diag);
    }
}

}  // namespace qss
