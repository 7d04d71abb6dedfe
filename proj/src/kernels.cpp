// SPDX-License-Identifier: Apache-2.0
#include "tumbler/kernels.hpp"

#include <bit>
#include <cassert>
#include <vector>

namespace tumbler::kernels {

namespace {

// Buffers at least this many words wide go through the OpenMP path.
constexpr std::uint64_t kParallelWords = 1u << 11; // 2^17 bits

inline std::uint64_t low_mask(std::uint64_t nbits) {
    return nbits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits) - 1;
}

// 64 bits of `in` starting at bit index `start` (mod nbits); only valid
// when nbits is a multiple of 64.
inline std::uint64_t gather_word(std::span<const std::uint64_t> in,
                                 std::uint64_t nwords, std::uint64_t start) {
    const std::uint64_t w = start / 64;
    const unsigned off = static_cast<unsigned>(start % 64);
    const std::uint64_t lo = in[w] >> off;
    if (off == 0) {
        return lo;
    }
    return lo | (in[(w + 1) % nwords] << (64 - off));
}

} // namespace

std::uint64_t popcount(std::span<const std::uint64_t> words) {
    std::uint64_t n = 0;
    for (std::uint64_t w : words) {
        n += static_cast<std::uint64_t>(std::popcount(w));
    }
    return n;
}

void rotate(std::span<const std::uint64_t> in, std::uint64_t nbits,
            std::uint64_t shift, std::span<std::uint64_t> out) {
    assert(shift < nbits);
    assert(in.data() != out.data());
    if (nbits <= 64) {
        const std::uint64_t w = in[0];
        out[0] = shift == 0
                     ? w
                     : ((w >> shift) | (w << (nbits - shift))) & low_mask(nbits);
        return;
    }
    if (nbits % 64 == 0) {
        const std::uint64_t nwords = nbits / 64;
        for (std::uint64_t j = 0; j < nwords; ++j) {
            out[j] = gather_word(in, nwords, (64 * j + shift) % nbits);
        }
        return;
    }
    // irregular width: correctness-only path
    reference::rotate(in, nbits, shift, out);
}

void xor_rotations(std::span<const std::uint64_t> master, std::uint64_t nbits,
                   std::span<const std::uint32_t> shifts,
                   std::span<std::uint64_t> out) {
    assert(!shifts.empty());
    assert(master.data() != out.data());
    if (nbits <= 64) {
        std::uint64_t acc = 0;
        const std::uint64_t w = master[0];
        const std::uint64_t mask = low_mask(nbits);
        for (std::uint32_t t : shifts) {
            acc ^= t == 0 ? w : ((w >> t) | (w << (nbits - t))) & mask;
        }
        out[0] = acc & mask;
        return;
    }
    if (nbits % 64 == 0) {
        const std::int64_t nwords = static_cast<std::int64_t>(nbits / 64);
#pragma omp parallel for schedule(static) if (nwords >= static_cast<std::int64_t>(kParallelWords))
        for (std::int64_t j = 0; j < nwords; ++j) {
            std::uint64_t acc = 0;
            for (std::uint32_t t : shifts) {
                acc ^= gather_word(master, static_cast<std::uint64_t>(nwords),
                                   (64 * static_cast<std::uint64_t>(j) + t) % nbits);
            }
            out[j] = acc;
        }
        return;
    }
    reference::xor_rotations(master, nbits, shifts, out);
}

void adc(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
         std::uint64_t nbits, std::span<std::uint64_t> out) {
    if (nbits <= 64) {
        const std::uint64_t x = a[0];
        const std::uint64_t y = b[0];
        if (nbits == 64) {
            std::uint64_t s = x + y;
            const bool carry = s < x;
            out[0] = s + (carry ? 1 : 0); // cannot overflow again
            return;
        }
        const std::uint64_t s = x + y; // fits: nbits <= 63
        out[0] = (s & low_mask(nbits)) + (s >> nbits);
        return;
    }
    assert(nbits % 64 == 0);
    const std::uint64_t nwords = nbits / 64;
    std::uint64_t carry = 0;
    for (std::uint64_t j = 0; j < nwords; ++j) {
        const std::uint64_t x = a[j];
        const std::uint64_t s1 = x + b[j];
        const std::uint64_t c1 = s1 < x ? 1u : 0u;
        const std::uint64_t s2 = s1 + carry;
        const std::uint64_t c2 = s2 < s1 ? 1u : 0u;
        out[j] = s2;
        carry = c1 + c2;
    }
    // end-around: feed the top carry back in at bit 0
    for (std::uint64_t j = 0; carry != 0; ++j) {
        assert(j < nwords); // a sum of two values < 2^n cannot re-carry
        const std::uint64_t s = out[j] + carry;
        carry = s < out[j] ? 1u : 0u;
        out[j] = s;
    }
}

namespace reference {

void rotate(std::span<const std::uint64_t> in, std::uint64_t nbits,
            std::uint64_t shift, std::span<std::uint64_t> out) {
    assert(shift < nbits);
    std::vector<std::uint64_t> tmp(words_for_bits(nbits), 0);
    for (std::uint64_t i = 0; i < nbits; ++i) {
        set_bit(tmp, i, get_bit(in, (i + shift) % nbits));
    }
    for (std::uint64_t j = 0; j < tmp.size(); ++j) {
        out[j] = tmp[j];
    }
}

void xor_rotations(std::span<const std::uint64_t> master, std::uint64_t nbits,
                   std::span<const std::uint32_t> shifts,
                   std::span<std::uint64_t> out) {
    std::vector<std::uint64_t> tmp(words_for_bits(nbits), 0);
    for (std::uint64_t i = 0; i < nbits; ++i) {
        bool acc = false;
        for (std::uint32_t t : shifts) {
            acc ^= get_bit(master, (i + t) % nbits);
        }
        set_bit(tmp, i, acc);
    }
    for (std::uint64_t j = 0; j < tmp.size(); ++j) {
        out[j] = tmp[j];
    }
}

void adc(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
         std::uint64_t nbits, std::span<std::uint64_t> out) {
    std::vector<std::uint64_t> tmp(words_for_bits(nbits), 0);
    bool carry = false;
    for (std::uint64_t i = 0; i < nbits; ++i) {
        const int sum = int(get_bit(a, i)) + int(get_bit(b, i)) + int(carry);
        set_bit(tmp, i, sum & 1);
        carry = sum >= 2;
    }
    if (carry) {
        for (std::uint64_t i = 0;; ++i) {
            assert(i < nbits);
            if (!get_bit(tmp, i)) {
                set_bit(tmp, i, true);
                break;
            }
            set_bit(tmp, i, false);
        }
    }
    for (std::uint64_t j = 0; j < tmp.size(); ++j) {
        out[j] = tmp[j];
    }
}

} // namespace reference

} // namespace tumbler::kernels
