// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "tumbler/bigint.hpp"
#include "tumbler/bitstring.hpp"
#include "tumbler/ring.hpp"

namespace tumbler::engine {

struct EngineConfig {
    std::uint64_t table_size = 65536;
    unsigned expanded_count = 24; // M', tumblers per iteration
    bool extra_final_churn = false;
    ReduceOp reduce_op = ReduceOp::Xor;
    bool oscillator_enabled = false;
    std::uint64_t oscillator_seed = 0;
};

/// Rotates the master ring by every tumbler (all rotations taken from the
/// start point) and reduces the stack positionwise into one ring.
RingTable churn(const RingTable& master, const TumblerSet& tumblers, ReduceOp op);

/// XORs tumblers with consecutive IV chunks. A result equal to an earlier
/// output drops that tumbler and keeps the IV cursor in place; once the IV
/// is exhausted the remaining tumblers are copied, still subject to the
/// drop rule. Throws EmptyResult if every tumbler is dropped.
TumblerSet salt_tumblers(const TumblerSet& tumblers, const BitString& iv);

/// Advances the built-in LCG once per tumbler and adds each draw (mod
/// table_size) to the matching tumbler; duplicates created by the shift
/// are dropped, first occurrences win.
std::pair<std::uint64_t, TumblerSet> mix_oscillator(std::uint64_t state,
                                                    const TumblerSet& tumblers,
                                                    std::uint64_t table_size);

/// Churns the table with the seed's decomposition and reads the expanded
/// tumbler set off the result. A fixed function of (jp, seed, config).
std::pair<RingTable, TumblerSet> constant_bit_mask(const RingTable& jp,
                                                   const BigInt& seed,
                                                   const EngineConfig& config);

/// The iterated state machine. One step() is one loop pass: salt the
/// current set, churn to the Intermediate Block, read fresh tumblers and
/// churn again to the Final Block, then read the next window. The caller
/// takes output bits from the returned Final Block.
class Generator {
public:
    Generator(const RingTable& jp, const BigInt& seed, BitString iv,
              const EngineConfig& config);

    /// Runs one loop pass and returns the new Final Block. Any failure
    /// aborts with GenerationAborted naming the failing iteration.
    const RingTable& step();

    const RingTable& ring() const { return ring_; }
    const TumblerSet& tumblers() const { return tumblers_; }
    std::uint64_t oscillator_state() const { return oscillator_state_; }
    std::uint64_t iterations() const { return iterations_; }
    const EngineConfig& config() const { return config_; }

private:
    EngineConfig config_;
    BitString iv_;
    RingTable ring_;
    TumblerSet tumblers_;
    std::uint64_t oscillator_state_ = 0;
    std::uint64_t iterations_ = 0;
};

/// Runs the machine until n_bits have been emitted (half a table per
/// iteration) and truncates. Deterministic in all inputs.
BitString generate(const RingTable& jp, const BigInt& seed, const BitString& iv,
                   const EngineConfig& config, std::uint64_t n_bits);

} // namespace tumbler::engine
