// SPDX-License-Identifier: Apache-2.0
#include "tumbler/ring.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "tumbler/errors.hpp"
#include "tumbler/rng.hpp"

namespace tumbler {

namespace {

constexpr std::uint64_t kMinSize = 4;
constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;
constexpr char kMagic[4] = {'J', 'P', 'T', '1'};

void check_size(std::uint64_t size) {
    if (size < kMinSize || size > kMaxSize || !std::has_single_bit(size)) {
        throw BadSize("table size must be a power of two in [4, 2^24]");
    }
}

void check_same_size(std::span<const RingTable> tables) {
    if (tables.empty()) {
        throw InvalidArgument("reduce: need at least one table");
    }
    for (const RingTable& t : tables) {
        if (t.size() != tables.front().size()) {
            throw SizeMismatch("reduce: tables differ in size");
        }
    }
}

} // namespace

bool TumblerSet::contains(std::uint32_t v) const {
    return std::find(values.begin(), values.end(), v) != values.end();
}

bool TumblerSet::distinct() const {
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) {
                return false;
            }
        }
    }
    return true;
}

RingTable RingTable::zeros(std::uint64_t size) {
    check_size(size);
    RingTable t;
    t.size_ = size;
    t.width_ = static_cast<unsigned>(std::countr_zero(size));
    t.words_.assign(kernels::words_for_bits(size), 0);
    return t;
}

RingTable RingTable::from_bits(std::string_view bits) {
    RingTable t = zeros(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw InvalidArgument("RingTable::from_bits: expected '0' or '1'");
        }
        t.set_bit(i, bits[i] == '1');
    }
    return t;
}

std::string RingTable::to_bits() const {
    std::string s;
    s.reserve(size_);
    for (std::uint64_t i = 0; i < size_; ++i) {
        s.push_back(bit(i) ? '1' : '0');
    }
    return s;
}

RingTable generate_table(std::uint64_t size, std::uint64_t generator_seed) {
    RingTable t = RingTable::zeros(size);
    for (std::uint64_t i = 0; i < size / 2; ++i) {
        t.set_bit(i, true);
    }
    // Fisher-Yates over the bit positions, indices by modulo reduction
    Lcg64 rng(generator_seed);
    for (std::uint64_t i = size - 1; i >= 1; --i) {
        const std::uint64_t j = rng.next32() % (i + 1);
        const bool bi = t.bit(i);
        const bool bj = t.bit(j);
        t.set_bit(i, bj);
        t.set_bit(j, bi);
    }
    return t;
}

RingTable rotate(const RingTable& table, std::uint64_t tumbler) {
    if (table.size() == 0) {
        throw InvalidArgument("rotate: empty table");
    }
    if (tumbler >= table.size()) {
        throw InvalidArgument("rotate: tumbler must be below the table size");
    }
    RingTable out = RingTable::zeros(table.size());
    kernels::rotate(table.words(), table.size(), tumbler, out.words());
    return out;
}

RingTable xor_reduce(std::span<const RingTable> tables) {
    check_same_size(tables);
    RingTable out = tables.front();
    for (std::size_t i = 1; i < tables.size(); ++i) {
        auto ow = out.words();
        auto tw = tables[i].words();
        for (std::size_t j = 0; j < ow.size(); ++j) {
            ow[j] ^= tw[j];
        }
    }
    return out;
}

RingTable adc_reduce(std::span<const RingTable> tables) {
    check_same_size(tables);
    RingTable out = tables.front();
    for (std::size_t i = 1; i < tables.size(); ++i) {
        kernels::adc(out.words(), tables[i].words(), out.size(), out.words());
    }
    return out;
}

TumblerSet read_tumblers(const RingTable& table, std::uint64_t start_bit,
                         std::size_t count, bool filter_repeats) {
    if (table.size() == 0) {
        throw InvalidArgument("read_tumblers: empty table");
    }
    if (start_bit >= table.size()) {
        throw InvalidArgument("read_tumblers: start_bit out of range");
    }
    if (count == 0) {
        throw InvalidArgument("read_tumblers: count must be positive");
    }
    const std::uint64_t size = table.size();
    const unsigned w = table.chunk_width();
    const std::uint64_t budget = 2 * ((size + w - 1) / w); // two full passes
    TumblerSet set;
    set.width = w;
    set.values.reserve(count);
    std::uint64_t pos = start_bit;
    std::uint64_t scanned = 0;
    while (set.values.size() < count) {
        if (scanned == budget) {
            throw InsufficientUniqueValues(
                "read_tumblers: ran out of unique chunk values");
        }
        std::uint32_t v = 0;
        for (unsigned j = 0; j < w; ++j) {
            v |= static_cast<std::uint32_t>(table.bit((pos + j) % size)) << j;
        }
        ++scanned;
        pos = (pos + w) % size;
        if (filter_repeats && set.contains(v)) {
            continue;
        }
        set.values.push_back(v);
    }
    return set;
}

std::vector<std::uint8_t> serialize(const RingTable& table) {
    if (table.size() == 0) {
        throw InvalidArgument("serialize: empty table");
    }
    const std::uint64_t payload = (table.size() + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(12 + payload);
    out.insert(out.end(), kMagic, kMagic + 4);
    for (unsigned i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(table.size() >> (8 * i)));
    }
    auto words = table.words();
    for (std::uint64_t i = 0; i < payload; ++i) {
        out.push_back(static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8))));
    }
    return out;
}

RingTable deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12) {
        throw BadLength("table file shorter than its header");
    }
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw BadMagic("not a JPT1 table file");
    }
    std::uint64_t size = 0;
    for (unsigned i = 0; i < 8; ++i) {
        size |= static_cast<std::uint64_t>(bytes[4 + i]) << (8 * i);
    }
    check_size(size);
    const std::uint64_t payload = (size + 7) / 8;
    if (bytes.size() != 12 + payload) {
        throw BadLength("table file length does not match its header");
    }
    RingTable t = RingTable::zeros(size);
    auto words = t.words();
    for (std::uint64_t i = 0; i < payload; ++i) {
        words[i / 8] |= static_cast<std::uint64_t>(bytes[12 + i]) << (8 * (i % 8));
    }
    // padding bits past `size` must be zero
    for (std::uint64_t i = size; i < 8 * payload; ++i) {
        if (t.bit(i)) {
            throw TrailingBits("nonzero padding bits past the table size");
        }
    }
    return t;
}

void save_table(const RingTable& table, const std::string& path) {
    const auto bytes = serialize(table);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error("cannot open '" + path + "' for writing");
    }
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw Error("short write to '" + path + "'");
    }
}

RingTable load_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot open '" + path + "' for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

} // namespace tumbler
