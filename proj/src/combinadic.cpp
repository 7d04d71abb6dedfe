// SPDX-License-Identifier: Apache-2.0
#include "tumbler/combinadic.hpp"

#include <algorithm>

#include "tumbler/errors.hpp"

namespace tumbler::combinadic {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1; // divides exactly: result is C(n, i+1) here
    }
    return result;
}

unsigned min_tumbler_count(std::uint64_t table_size, const BigInt& seed) {
    if (table_size == 0) {
        throw InvalidArgument("min_tumbler_count: table_size must be positive");
    }
    if (seed < 0) {
        throw InvalidArgument("min_tumbler_count: seed must be non-negative");
    }
    BigInt c = table_size; // C(L, 1)
    for (std::uint64_t m = 1; m <= table_size; ++m) {
        if (c > seed) {
            return static_cast<unsigned>(m);
        }
        // C(L, m+1) = C(L, m) * (L - m) / (m + 1)
        c *= table_size - m;
        c /= m + 1;
    }
    throw NoRepresentation("min_tumbler_count: seed has no representation in this table size");
}

namespace {

void check_preconditions(const BigInt& seed, unsigned count, std::uint64_t table_size) {
    if (count == 0) {
        throw InvalidArgument("decompose: count must be positive");
    }
    if (seed < 0) {
        throw InvalidArgument("decompose: seed must be non-negative");
    }
    if (count > table_size) {
        throw InvalidArgument("decompose: count exceeds table size");
    }
    if (seed >= binomial(table_size, count)) {
        // Too few terms for this seed, or count past the binomial peak.
        try {
            if (min_tumbler_count(table_size, seed) > count) {
                throw CountTooSmall("decompose: count below the minimum tumbler count for this seed");
            }
        } catch (const NoRepresentation&) {
            // no count works at all; report against the requested one
        }
        throw SeedTooLarge("decompose: seed not below C(table_size, count)");
    }
}

} // namespace

std::vector<std::uint64_t> decompose(const BigInt& seed, unsigned count,
                                     std::uint64_t table_size) {
    check_preconditions(seed, count, table_size);
    std::vector<std::uint64_t> terms;
    terms.reserve(count);
    BigInt remaining = seed;
    std::uint64_t prev = table_size;
    for (unsigned i = 0; i < count; ++i) {
        const std::uint64_t k = count - i;
        std::uint64_t lo = k - 1; // C(k-1, k) = 0 <= remaining always holds
        std::uint64_t hi = prev - 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (binomial(mid, k) <= remaining) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        terms.push_back(lo);
        remaining -= binomial(lo, k);
        prev = lo;
    }
    if (remaining != 0) {
        throw InvalidDecomposition("decompose: nonzero remainder (internal error)");
    }
    return terms;
}

std::vector<std::uint64_t> decompose_linear(const BigInt& seed, unsigned count,
                                            std::uint64_t table_size) {
    check_preconditions(seed, count, table_size);
    std::vector<std::uint64_t> terms;
    terms.reserve(count);
    BigInt remaining = seed;
    std::uint64_t prev = table_size;
    for (unsigned i = 0; i < count; ++i) {
        const std::uint64_t k = count - i;
        std::uint64_t m = k - 1;
        BigInt c = 0; // C(k-1, k)
        // climb while the next coefficient still fits under the remainder
        while (m + 1 <= prev - 1) {
            // C(m+1, k) from C(m, k); the first step lands on C(k, k) = 1
            BigInt next = (m + 1 == k) ? BigInt(1) : c * (m + 1) / (m + 1 - k);
            if (next > remaining) {
                break;
            }
            c = next;
            ++m;
        }
        terms.push_back(m);
        remaining -= c;
        prev = m;
    }
    if (remaining != 0) {
        throw InvalidDecomposition("decompose_linear: nonzero remainder (internal error)");
    }
    return terms;
}

BigInt compose(std::span<const std::uint64_t> terms) {
    if (terms.empty()) {
        throw InvalidDecomposition("compose: empty decomposition");
    }
    const std::size_t m = terms.size();
    BigInt sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0 && terms[i] >= terms[i - 1]) {
            throw InvalidDecomposition("compose: terms must strictly descend");
        }
        sum += binomial(terms[i], static_cast<std::uint64_t>(m - i));
    }
    return sum;
}

} // namespace tumbler::combinadic
