#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qss {

// Raw subset-sum instance: positive integers x_1..x_n and a non-negative
// target s.
struct ProblemInstance {
    std::vector<std::uint64_t> elements;
    std::uint64_t target = 0;

    static constexpr int kDefaultMaxElements = 10;

    int n() const { return static_cast<int>(elements.size()); }
    std::uint64_t element_sum() const;

    // Throws std::invalid_argument on empty set, zero elements, or n over cap.
    void validate(int max_elements = kDefaultMaxElements) const;
};

// Dyadic eigenphase encoding: every subset sum is an exact t-bit fraction
// sum/2^t. The numerators are the original elements, so a phase-register
// readout is the raw integer subset sum.
struct ScaledInstance {
    std::vector<std::uint64_t> numerators;
    int phase_bits = 0;  // t
    std::uint64_t scaled_target = 0;

    int n() const { return static_cast<int>(numerators.size()); }
    std::uint64_t denominator() const { return std::uint64_t{1} << phase_bits; }
    std::uint64_t numerator_sum() const;
};

// The 2^n eigenphases of the diagonal unitary, stored exactly as numerators
// over 2^t. Entry j is the sum over elements whose bit is set in j (bit 0 of
// j selects x_1, the rightmost Kronecker factor).
struct DiagonalUnitary {
    std::vector<std::uint64_t> numerators;
    int phase_bits = 0;

    std::size_t size() const { return numerators.size(); }
    double angle(std::uint64_t subset_index) const;  // 2*pi*num/2^t
};

// Chooses t = max(n, ceil(log2(sum)) + 1) unless overridden; enforces
// t >= n and sum(x) <= 2^(t-1).
ScaledInstance scale_instance(const ProblemInstance& instance,
                              std::optional<int> t_override = std::nullopt);

// Exact phase numerator of subset j (denominator 2^t): the integer sum of the
// selected elements.
std::uint64_t phase_of(const ScaledInstance& scaled, std::uint64_t subset_index);

DiagonalUnitary build_diagonal(const ScaledInstance& scaled);

}  // namespace qss
