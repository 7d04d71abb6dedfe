// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tumbler/kernels.hpp"

namespace tumbler {

enum class ReduceOp { Xor, Adc };

/// Ordered list of rotation values, each `width` bits wide.
struct TumblerSet {
    std::vector<std::uint32_t> values;
    unsigned width = 0;

    bool contains(std::uint32_t v) const;
    bool distinct() const;
    bool operator==(const TumblerSet&) const = default;
};

/// Fixed-length circular bit array with its start point at position 0.
/// The size is a power of two in [4, 2^24]; chunk_width() = log2(size).
class RingTable {
public:
    RingTable() = default;

    static RingTable zeros(std::uint64_t size);
    /// Position 0 first: from_bits("011010") puts 0 at the start point.
    static RingTable from_bits(std::string_view bits);

    std::uint64_t size() const { return size_; }
    unsigned chunk_width() const { return width_; }

    bool bit(std::uint64_t i) const { return kernels::get_bit(words_, i); }
    void set_bit(std::uint64_t i, bool v) { kernels::set_bit(words_, i, v); }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::uint64_t popcount() const { return kernels::popcount(words_); }
    std::string to_bits() const;

    bool operator==(const RingTable&) const = default;

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
    unsigned width_ = 0;
};

/// Balanced random table: exactly size/2 one-bits, deterministic in
/// (size, generator_seed).
RingTable generate_table(std::uint64_t size, std::uint64_t generator_seed);

/// out.bit[i] = in.bit[(i + tumbler) mod size]. Oversized tumblers are
/// rejected, not reduced.
RingTable rotate(const RingTable& table, std::uint64_t tumbler);

/// Positionwise XOR of all tables (>= 1, equal sizes).
RingTable xor_reduce(std::span<const RingTable> tables);

/// Sequential left fold of end-around-carry addition in list order.
RingTable adc_reduce(std::span<const RingTable> tables);

/// Reads consecutive chunk_width-bit chunks from start_bit, wrapping
/// around the ring; chunk values take the lower ring position as the less
/// significant bit. With filter_repeats, a chunk equal to an
/// already-accepted value is skipped. Scanning more than two full passes
/// (2 * ceil(size / width) chunks) without `count` accepted values throws
/// InsufficientUniqueValues.
TumblerSet read_tumblers(const RingTable& table, std::uint64_t start_bit,
                         std::size_t count, bool filter_repeats);

/// Table file format: 4 ASCII bytes "JPT1"; 8-byte little-endian size in
/// bits; ceil(size/8) payload bytes with bit i at (byte[i/8] >> (i%8)) & 1;
/// padding bits zero.
std::vector<std::uint8_t> serialize(const RingTable& table);
RingTable deserialize(std::span<const std::uint8_t> bytes);

void save_table(const RingTable& table, const std::string& path);
RingTable load_table(const std::string& path);

} // namespace tumbler
