// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tumbler/errors.hpp"

namespace tumbler {

/// Dynamically sized bit sequence packed into bytes.
/// Bit i lives at (bytes[i / 8] >> (i % 8)) & 1; padding bits stay zero.
class BitString {
public:
    BitString() = default;

    /// Whole bytes from a hex string, two digits per byte in text order.
    static BitString from_hex(const std::string& hex) {
        if (hex.size() % 2 != 0) {
            throw InvalidArgument("BitString::from_hex: odd number of hex digits");
        }
        BitString out;
        out.bytes_.reserve(hex.size() / 2);
        for (std::size_t i = 0; i < hex.size(); i += 2) {
            out.bytes_.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
        }
        out.size_ = 8 * out.bytes_.size();
        return out;
    }

    /// From a "0101..." character string, bit 0 first.
    static BitString from_bits(std::string_view bits) {
        BitString out;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw InvalidArgument("BitString::from_bits: expected '0' or '1'");
            }
            out.append_bit(c == '1');
        }
        return out;
    }

    void append_bit(bool v) {
        if (size_ % 8 == 0) {
            bytes_.push_back(0);
        }
        if (v) {
            bytes_.back() |= static_cast<std::uint8_t>(1u << (size_ % 8));
        }
        ++size_;
    }

    /// Appends `width` bits of `value`, low bit first.
    void append_chunk(std::uint32_t value, unsigned width) {
        for (unsigned j = 0; j < width; ++j) {
            append_bit((value >> j) & 1u);
        }
    }

    bool bit(std::uint64_t i) const {
        return (bytes_[i / 8] >> (i % 8)) & 1u;
    }

    /// Value of the index-th non-overlapping `width`-bit chunk, low ring
    /// position as the least significant bit.
    std::uint32_t chunk(std::uint64_t index, unsigned width) const {
        std::uint32_t v = 0;
        const std::uint64_t base = index * width;
        for (unsigned j = 0; j < width; ++j) {
            v |= static_cast<std::uint32_t>(bit(base + j)) << j;
        }
        return v;
    }

    void truncate(std::uint64_t n_bits) {
        if (n_bits >= size_) {
            return;
        }
        size_ = n_bits;
        bytes_.resize((size_ + 7) / 8);
        if (size_ % 8 != 0 && !bytes_.empty()) {
            bytes_.back() &= static_cast<std::uint8_t>((1u << (size_ % 8)) - 1);
        }
    }

    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_bits() const {
        std::string s;
        s.reserve(size_);
        for (std::uint64_t i = 0; i < size_; ++i) {
            s.push_back(bit(i) ? '1' : '0');
        }
        return s;
    }

    bool operator==(const BitString&) const = default;

private:
    static unsigned nibble(char c) {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw InvalidArgument(std::string("BitString: invalid hex digit '") + c + "'");
    }

    std::vector<std::uint8_t> bytes_;
    std::uint64_t size_ = 0;
};

} // namespace tumbler
