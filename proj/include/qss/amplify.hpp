#pragma once

#include <cstdint>
#include <vector>

#include "qss/qpe.hpp"
#include "qss/statevector.hpp"

namespace qss {

// Classical census of the good set L = {j : sum(j) <= s}.
struct GoodSetSummary {
    std::uint64_t good_count = 0;
    std::uint64_t bad_count = 0;
    double theta = 0.0;  // asin(sqrt(|L|/2^n))
    int optimal_k = 0;   // floor(pi/(4*theta))
};

enum class AmplifyMode { ExactCount, Blind };

struct AaTraceRow {
    int k;
    double good_mass;
    double analytic;
};

struct AmplifyOutcome {
    QuantumState state;
    GoodSetSummary summary;
    int iterations = 0;
    int restarts = 0;
    bool succeeded = false;
    double good_mass = 0.0;  // of the returned state
};

GoodSetSummary count_good(const ScaledInstance& scaled, std::uint64_t target);

// F_phi: negates every amplitude whose Register-1 value is <= target.
void oracle_flip_leq(QuantumState& state, std::uint64_t target);

// S = 2|psi1><psi1| - I.
void diffusion(QuantumState& state, const QuantumState& psi1);

// One Grover iteration G = S (F_phi x I).
void grover_iteration(QuantumState& state, std::uint64_t target, const QuantumState& psi1);

double good_mass(const QuantumState& state, std::uint64_t target);

// Exact-count mode: optimal_k Grover iterations, then a binary good/bad
// projective measurement with restarts, leaving all mass on the good
// subspace. Blind mode: randomized exponential schedule (c = 6/5), full
// Register-1 measurement, classical test r1 <= s, restart on failure.
// Restart exhaustion is reported through `succeeded`, not thrown.
AmplifyOutcome amplify_good(const QpeResult& qpe, const ScaledInstance& scaled,
                            std::uint64_t target, AmplifyMode mode, Rng& rng,
                            int max_restarts = 64,
                            std::vector<AaTraceRow>* trace = nullptr);

}  // namespace qss
