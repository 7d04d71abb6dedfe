// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "tumbler/ring.hpp"

namespace tumbler::cryptanalysis {

struct AttackInstance {
    RingTable master;
    RingTable target;        // churn output to invert
    unsigned tumbler_count = 2; // T, even and >= 2
    ReduceOp reduce_op = ReduceOp::Xor;
};

struct CostModel {
    std::uint64_t table_size = 0;
    unsigned tumbler_count = 0;
    double log2_list_size = 0.0;   // log2 C(L, T/2)
    double log2_lower_bound = 0.0; // log2 C(L, T/2) - log2 C(T, T/2)
};

/// Meet-in-the-middle recovery of the tumbler set behind a churn output.
/// Enumerates every T/2-subset of [0, L), adjusts one list against the
/// target, sorts both and walks them for matches; a match whose combined T
/// tumblers are distinct and re-churn to the target exactly becomes a
/// candidate. Candidates come back ascending, deduplicated. Enumeration is
/// capped at 2^26 half-sets (TooLarge); throws NoSolution when nothing
/// verifies.
std::vector<TumblerSet> mitm_attack(const AttackInstance& instance);

/// Operation-count model of the attack above with exact binomials.
CostModel attack_cost(std::uint64_t table_size, unsigned tumbler_count);

/// Smallest even T whose attack cost reaches the brute-force baseline
/// log2 C(L, M) - 1 for an initial tumbler count M.
unsigned min_secure_expanded_count(std::uint64_t table_size, unsigned initial_count);

} // namespace tumbler::cryptanalysis
