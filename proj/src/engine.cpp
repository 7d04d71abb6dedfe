// SPDX-License-Identifier: Apache-2.0
#include "tumbler/engine.hpp"

#include <string>
#include <vector>

#include "tumbler/combinadic.hpp"
#include "tumbler/errors.hpp"
#include "tumbler/rng.hpp"

namespace tumbler::engine {

namespace {

// Reduction of the rotation stack without the distinctness gate; the
// optional extra churn reads its tumblers with filtering off, so repeats
// are legal there and simply cancel under XOR.
RingTable reduce_rotations(const RingTable& master, const TumblerSet& tumblers,
                           ReduceOp op) {
    for (std::uint32_t t : tumblers.values) {
        if (t >= master.size()) {
            throw InvalidArgument("churn: tumbler value out of range");
        }
    }
    if (op == ReduceOp::Xor) {
        RingTable out = RingTable::zeros(master.size());
        kernels::xor_rotations(master.words(), master.size(), tumblers.values,
                               out.words());
        return out;
    }
    RingTable out = rotate(master, tumblers.values.front());
    RingTable scratch = RingTable::zeros(master.size());
    for (std::size_t i = 1; i < tumblers.values.size(); ++i) {
        kernels::rotate(master.words(), master.size(), tumblers.values[i],
                        scratch.words());
        kernels::adc(out.words(), scratch.words(), out.size(), out.words());
    }
    return out;
}

void check_config(const EngineConfig& config, const RingTable& jp) {
    if (config.table_size != jp.size()) {
        throw InvalidArgument("engine: config table_size does not match the table");
    }
    const unsigned w = jp.chunk_width();
    const std::uint64_t max_count = 2 * jp.size() / w; // the read budget
    if (config.expanded_count < 2 || config.expanded_count > max_count) {
        throw InvalidArgument("engine: expanded_count out of range [2, 2L/w]");
    }
}

} // namespace

RingTable churn(const RingTable& master, const TumblerSet& tumblers, ReduceOp op) {
    if (tumblers.values.empty()) {
        throw InvalidArgument("churn: empty tumbler set");
    }
    if (!tumblers.distinct()) {
        throw DuplicateTumbler("churn: repeated tumbler value");
    }
    return reduce_rotations(master, tumblers, op);
}

TumblerSet salt_tumblers(const TumblerSet& tumblers, const BitString& iv) {
    if (tumblers.width == 0) {
        throw InvalidArgument("salt_tumblers: tumbler width not set");
    }
    if (!tumblers.distinct()) {
        throw InvalidArgument("salt_tumblers: input tumblers must be distinct");
    }
    if (iv.size() % tumblers.width != 0) {
        throw InvalidInitVector("IV length must be a multiple of the chunk width");
    }
    const std::uint64_t iv_chunks = iv.size() / tumblers.width;
    TumblerSet out;
    out.width = tumblers.width;
    std::uint64_t cursor = 0;
    for (std::uint32_t t : tumblers.values) {
        const std::uint32_t candidate =
            cursor < iv_chunks ? t ^ iv.chunk(cursor, tumblers.width) : t;
        if (out.contains(candidate)) {
            continue; // drop the tumbler, stay on the current IV chunk
        }
        out.values.push_back(candidate);
        if (cursor < iv_chunks) {
            ++cursor;
        }
    }
    if (out.values.empty()) {
        throw EmptyResult("salt_tumblers: every tumbler was dropped");
    }
    return out;
}

std::pair<std::uint64_t, TumblerSet> mix_oscillator(std::uint64_t state,
                                                    const TumblerSet& tumblers,
                                                    std::uint64_t table_size) {
    Lcg64 rng(state);
    TumblerSet out;
    out.width = tumblers.width;
    for (std::uint32_t t : tumblers.values) {
        const std::uint32_t offset = rng.next32() % table_size;
        const std::uint32_t moved =
            static_cast<std::uint32_t>((t + offset) % table_size);
        if (!out.contains(moved)) {
            out.values.push_back(moved);
        }
    }
    if (out.values.empty()) {
        throw EmptyResult("mix_oscillator: deduplication emptied the set");
    }
    return {rng.state(), out};
}

std::pair<RingTable, TumblerSet> constant_bit_mask(const RingTable& jp,
                                                   const BigInt& seed,
                                                   const EngineConfig& config) {
    check_config(config, jp);
    const unsigned min_count = combinadic::min_tumbler_count(jp.size(), seed);
    if (min_count > config.expanded_count) {
        throw CountTooSmall("constant_bit_mask: expanded_count below the seed's "
                            "minimum tumbler count");
    }
    const auto terms = combinadic::decompose(seed, min_count, jp.size());
    TumblerSet initial;
    initial.width = jp.chunk_width();
    initial.values.reserve(terms.size());
    for (std::uint64_t m : terms) {
        initial.values.push_back(static_cast<std::uint32_t>(m));
    }
    RingTable mask = churn(jp, initial, config.reduce_op);
    TumblerSet expanded =
        read_tumblers(mask, 0, config.expanded_count, /*filter_repeats=*/true);
    return {std::move(mask), std::move(expanded)};
}

Generator::Generator(const RingTable& jp, const BigInt& seed, BitString iv,
                     const EngineConfig& config)
    : config_(config), iv_(std::move(iv)),
      oscillator_state_(config.oscillator_seed) {
    if (iv_.size() % jp.chunk_width() != 0) {
        throw InvalidInitVector("IV length must be a multiple of the chunk width");
    }
    auto [mask, expanded] = constant_bit_mask(jp, seed, config_);
    ring_ = std::move(mask);
    tumblers_ = std::move(expanded);
}

const RingTable& Generator::step() {
    try {
        TumblerSet current = tumblers_;
        if (config_.oscillator_enabled) {
            auto [next_state, mixed] =
                mix_oscillator(oscillator_state_, current, config_.table_size);
            oscillator_state_ = next_state;
            current = std::move(mixed);
        }
        const TumblerSet salted = salt_tumblers(current, iv_);
        const RingTable intermediate = churn(ring_, salted, config_.reduce_op);
        const TumblerSet final_tumblers = read_tumblers(
            intermediate, 0, config_.expanded_count, /*filter_repeats=*/true);
        RingTable final_block = churn(intermediate, final_tumblers, config_.reduce_op);
        if (config_.extra_final_churn) {
            const TumblerSet unfiltered = read_tumblers(
                final_block, 0, config_.expanded_count, /*filter_repeats=*/false);
            final_block = reduce_rotations(final_block, unfiltered, config_.reduce_op);
        }
        tumblers_ = read_tumblers(final_block, final_block.size() / 2,
                                  config_.expanded_count, /*filter_repeats=*/true);
        ring_ = std::move(final_block);
        ++iterations_;
        return ring_;
    } catch (const GenerationAborted&) {
        throw;
    } catch (const Error& e) {
        throw GenerationAborted("iteration " + std::to_string(iterations_) + ": " +
                                e.what());
    }
}

BitString generate(const RingTable& jp, const BigInt& seed, const BitString& iv,
                   const EngineConfig& config, std::uint64_t n_bits) {
    if (n_bits == 0) {
        throw InvalidArgument("generate: n_bits must be positive");
    }
    Generator machine(jp, seed, iv, config);
    BitString out;
    const std::uint64_t half = jp.size() / 2;
    while (out.size() < n_bits) {
        const RingTable& final_block = machine.step();
        for (std::uint64_t i = 0; i < half; ++i) {
            out.append_bit(final_block.bit(i));
        }
    }
    out.truncate(n_bits);
    return out;
}

} // namespace tumbler::engine
