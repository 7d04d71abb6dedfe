// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace tumbler {

/// 64-bit linear congruential generator (MMIX multiplier/increment).
/// state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64);
/// each draw outputs the high 32 bits of the new state.
class Lcg64 {
public:
    explicit constexpr Lcg64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint32_t next32() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Two 32-bit draws, high half first.
    constexpr std::uint64_t next64() {
        const std::uint64_t hi = next32();
        const std::uint64_t lo = next32();
        return (hi << 32) | lo;
    }

    constexpr std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace tumbler
