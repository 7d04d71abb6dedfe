// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

namespace tumbler::kernels {

// Bit i of a buffer lives at (words[i / 64] >> (i % 64)) & 1. A buffer of
// n bits occupies ceil(n / 64) words; padding bits above n are zero and
// every kernel keeps them zero.

inline constexpr std::uint64_t words_for_bits(std::uint64_t nbits) {
    return (nbits + 63) / 64;
}

inline bool get_bit(std::span<const std::uint64_t> words, std::uint64_t i) {
    return (words[i / 64] >> (i % 64)) & 1u;
}

inline void set_bit(std::span<std::uint64_t> words, std::uint64_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
        words[i / 64] |= mask;
    } else {
        words[i / 64] &= ~mask;
    }
}

std::uint64_t popcount(std::span<const std::uint64_t> words);

/// out.bit[i] = in.bit[(i + shift) mod nbits], shift in [0, nbits).
/// in and out must not alias.
void rotate(std::span<const std::uint64_t> in, std::uint64_t nbits,
            std::uint64_t shift, std::span<std::uint64_t> out);

/// Fused churn kernel: out = XOR over all shifts of rotate(master, shift).
/// Output words are independent, so the loop parallelizes without changing
/// a single bit of the result. master and out must not alias.
void xor_rotations(std::span<const std::uint64_t> master, std::uint64_t nbits,
                   std::span<const std::uint32_t> shifts,
                   std::span<std::uint64_t> out);

/// End-around-carry addition over nbits-wide rings: the carry out of the
/// top bit is re-added at bit 0, keeping the sum below 2^nbits. out may
/// alias a or b.
void adc(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
         std::uint64_t nbits, std::span<std::uint64_t> out);

/// Bit-at-a-time implementations of the kernels above, kept as the serial
/// reference for equivalence tests and as the benchmark baseline.
namespace reference {

void rotate(std::span<const std::uint64_t> in, std::uint64_t nbits,
            std::uint64_t shift, std::span<std::uint64_t> out);

void xor_rotations(std::span<const std::uint64_t> master, std::uint64_t nbits,
                   std::span<const std::uint32_t> shifts,
                   std::span<std::uint64_t> out);

void adc(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
         std::uint64_t nbits, std::span<std::uint64_t> out);

} // namespace reference

} // namespace tumbler::kernels
