// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tumbler/bigint.hpp"

namespace tumbler::combinadic {

/// Exact binomial coefficient C(n, k). Returns 0 when k > n and 1 when
/// k == 0 or k == n. Multiplicative formula with interleaved division;
/// every intermediate value is an exact integer.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Smallest M >= 1 with C(table_size, M) > seed.
/// Throws NoRepresentation when no M in [1, table_size] satisfies it.
unsigned min_tumbler_count(std::uint64_t table_size, const BigInt& seed);

/// Writes `seed` as `count` strictly descending terms m_0 > m_1 > ... with
/// sum_i C(m_i, count - i) == seed, terms below `table_size`. Each term is
/// the greatest admissible value, located by binary search over the
/// interval [count - 1 - i, previous term - 1].
std::vector<std::uint64_t> decompose(const BigInt& seed, unsigned count,
                                     std::uint64_t table_size);

/// Identical result to decompose(), found by ascending linear scan.
/// Kept as an independent oracle for equivalence tests.
std::vector<std::uint64_t> decompose_linear(const BigInt& seed, unsigned count,
                                            std::uint64_t table_size);

/// Inverse of decompose: sum_i C(terms[i], M - i) for M = terms.size().
/// Throws InvalidDecomposition unless the terms strictly descend.
BigInt compose(std::span<const std::uint64_t> terms);

} // namespace tumbler::combinadic
