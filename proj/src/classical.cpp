#include "qss/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qss {

OracleAnswer brute_force(const ProblemInstance& instance, int max_n) {
    instance.validate(max_n);
    const int n = instance.n();
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t s = instance.target;

    OracleAnswer answer;
    for (std::uint64_t j = 0; j < count; ++j) {
        std::uint64_t sum = 0;
        for (int i = 0; i < n; ++i) {
            if (j & (std::uint64_t{1} << i)) sum += instance.elements[i];
        }
        if (sum > s) continue;
        ++answer.good_count;
        answer.max_reachable = std::max(answer.max_reachable, sum);
        if (sum == s && !answer.witness) {
            answer.decision = true;
            std::vector<int> w;
            for (int i = 0; i < n; ++i) {
                if (j & (std::uint64_t{1} << i)) w.push_back(i);
            }
            answer.witness = std::move(w);
        }
    }
    return answer;
}

OracleAnswer dp_solve(const ProblemInstance& instance) {
    instance.validate(64);
    const std::uint64_t s = instance.target;
    if (s > 10'000'000) {
        throw std::invalid_argument("dp_solve: target " + std::to_string(s) +
                                    " exceeds table budget");
    }
    const int n = instance.n();
    // from[v] = index of the element that first made v reachable; n = "empty"
    std::vector<int> from(s + 1, -1);
    std::vector<std::uint64_t> count(s + 1, 0);
    from[0] = n;
    count[0] = 1;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t x = instance.elements[i];
        if (x > s) continue;
        for (std::uint64_t v = s; v >= x; --v) {
            count[v] += count[v - x];
            if (from[v] == -1 && from[v - x] != -1) from[v] = i;
        }
    }

    OracleAnswer answer;
    for (std::uint64_t v = 0; v <= s; ++v) {
        answer.good_count += count[v];
        if (from[v] != -1) answer.max_reachable = v;
    }
    if (from[s] != -1) {
        answer.decision = true;
        std::vector<int> w;
        std::uint64_t v = s;
        while (v > 0) {
            const int i = from[v];
            w.push_back(i);
            v -= instance.elements[i];
        }
        std::sort(w.begin(), w.end());
        answer.witness = std::move(w);
    }
    return answer;
}

bool verify(const ProblemInstance& instance, const std::vector<int>& subset) {
    std::vector<bool> seen(instance.elements.size(), false);
    std::uint64_t sum = 0;
    for (int i : subset) {
        if (i < 0 || i >= instance.n()) {
            throw std::out_of_range("verify: element index out of range");
        }
        if (seen[i]) {
            throw std::invalid_argument("verify: duplicate element index");
        }
        seen[i] = true;
        sum += instance.elements[i];
    }
    return sum == instance.target;
}

}  // namespace qss
