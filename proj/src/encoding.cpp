#include "qss/encoding.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qss {

std::uint64_t ProblemInstance::element_sum() const {
    std::uint64_t sum = 0;
    for (auto x : elements) sum += x;
    return sum;
}

void ProblemInstance::validate(int max_elements) const {
    if (elements.empty()) {
        throw std::invalid_argument("instance: element set is empty");
    }
    if (n() > max_elements) {
        throw std::invalid_argument("instance: n = " + std::to_string(n()) +
                                    " exceeds cap " + std::to_string(max_elements));
    }
    for (auto x : elements) {
        if (x == 0) {
            throw std::invalid_argument("instance: elements must be positive integers");
        }
    }
}

std::uint64_t ScaledInstance::numerator_sum() const {
    std::uint64_t sum = 0;
    for (auto x : numerators) sum += x;
    return sum;
}

double DiagonalUnitary::angle(std::uint64_t subset_index) const {
    if (subset_index >= numerators.size()) {
        throw std::out_of_range("diagonal: subset index out of range");
    }
    const double denom = static_cast<double>(std::uint64_t{1} << phase_bits);
    return 2.0 * std::numbers::pi * static_cast<double>(numerators[subset_index]) / denom;
}

namespace {

int ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0 : static_cast<int>(std::bit_width(x - 1));
}

}  // namespace

ScaledInstance scale_instance(const ProblemInstance& instance,
                              std::optional<int> t_override) {
    instance.validate();
    const std::uint64_t sum = instance.element_sum();
    int t = std::max(instance.n(), ceil_log2(sum) + 1);
    if (t_override) {
        t = *t_override;
        if (t < instance.n()) {
            throw std::invalid_argument("scale: t_override below n");
        }
        if (t >= 64 || sum > (std::uint64_t{1} << (t - 1))) {
            throw std::invalid_argument("scale: sum(x) exceeds 2^(t-1) for t_override");
        }
    }
    return ScaledInstance{instance.elements, t, instance.target};
}

std::uint64_t phase_of(const ScaledInstance& scaled, std::uint64_t subset_index) {
    if (subset_index >= (std::uint64_t{1} << scaled.n())) {
        throw std::out_of_range("phase_of: subset index out of range");
    }
    std::uint64_t num = 0;
    for (int i = 0; i < scaled.n(); ++i) {
        if (subset_index & (std::uint64_t{1} << i)) num += scaled.numerators[i];
    }
    return num;
}

DiagonalUnitary build_diagonal(const ScaledInstance& scaled) {
    const std::uint64_t count = std::uint64_t{1} << scaled.n();
    DiagonalUnitary diag;
    diag.phase_bits = scaled.phase_bits;
    diag.numerators.resize(count);
    diag.numerators[0] = 0;
    // numerator of j reuses j with its lowest set bit cleared
    for (std::uint64_t j = 1; j < count; ++j) {
        const int low = std::countr_zero(j);
        diag.numerators[j] = diag.numerators[j & (j - 1)] + scaled.numerators[low];
    }
    return diag;
}

}  // namespace qss
