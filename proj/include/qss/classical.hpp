#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qss/encoding.hpp"

namespace qss {

struct OracleAnswer {
    bool decision = false;
    std::optional<std::vector<int>> witness;  // 0-based element indices
    std::uint64_t max_reachable = 0;          // largest subset sum <= target
    std::uint64_t good_count = 0;             // |{j : sum(j) <= target}|
};

// 2^n enumeration; canonical witness is the lowest subset index hitting s.
OracleAnswer brute_force(const ProblemInstance& instance, int max_n = 20);

// Pseudo-polynomial reachability table with back-pointers and subset counts.
OracleAnswer dp_solve(const ProblemInstance& instance);

// Exact check that the indexed subset sums to the target. Throws on
// out-of-range or duplicate indices.
bool verify(const ProblemInstance& instance, const std::vector<int>& subset);

}  // namespace qss
