// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "tumbler/combinadic.hpp"
#include "tumbler/errors.hpp"
#include "tumbler/rng.hpp"

using namespace tumbler;
using namespace tumbler::combinadic;

namespace {

const BigInt kRealSeed = parse_hex("FEDCBA9876543210FEDCBA9876543210");
const std::vector<std::uint64_t> kRealTerms = {32286, 32188, 31273, 24609, 24444,
                                               22362, 21029, 18123, 11302, 7367};

} // namespace

TEST_CASE("binomial golden values") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(8, 5) == 56);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(65536, 2) == BigInt(65536) * 65535 / 2);
}

TEST_CASE("binomial matches the Pascal recurrence up to n = 64") {
    // C(n, k) = C(n-1, k-1) + C(n-1, k), built bottom-up
    std::vector<std::vector<BigInt>> pascal(65);
    for (std::size_t n = 0; n <= 64; ++n) {
        pascal[n].resize(n + 1);
        pascal[n][0] = pascal[n][n] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        }
    }
    for (std::uint64_t n = 0; n <= 64; ++n) {
        for (std::uint64_t k = 0; k <= 64; ++k) {
            const BigInt expected = (k <= n) ? pascal[n][k] : BigInt(0);
            REQUIRE(binomial(n, k) == expected);
        }
    }
}

TEST_CASE("min_tumbler_count") {
    CHECK(min_tumbler_count(6, 18) == 3);
    CHECK(min_tumbler_count(6, 14) == 2);  // C(6,2) = 15 > 14
    CHECK(min_tumbler_count(6, 0) == 1);
    CHECK(min_tumbler_count(65536, 0) == 1);
    CHECK(min_tumbler_count(65536, kRealSeed) == 10);
    // C(65536, 9) <= seed < C(65536, 10)
    CHECK(binomial(65536, 9) <= kRealSeed);
    CHECK(kRealSeed < binomial(65536, 10));
    // seed 15 < 2^4 but above every C(4, M) = 4, 6, 4, 1
    CHECK_THROWS_AS(min_tumbler_count(4, 15), NoRepresentation);
}

TEST_CASE("decompose golden values") {
    CHECK(decompose(18, 3, 6) == std::vector<std::uint64_t>{5, 4, 2});
    CHECK(decompose(56, 5, 16) == std::vector<std::uint64_t>{8, 3, 2, 1, 0});
    CHECK(decompose(18, 10, 16) ==
          std::vector<std::uint64_t>{11, 9, 8, 7, 6, 5, 4, 3, 1, 0});
    CHECK(decompose(0, 4, 9) == std::vector<std::uint64_t>{3, 2, 1, 0});
    CHECK(decompose(kRealSeed, 10, 65536) == kRealTerms);
}

TEST_CASE("decompose error paths") {
    // count below the minimum for this seed
    CHECK_THROWS_AS(decompose(18, 2, 6), CountTooSmall);
    // seed == C(6, 3); no representation at all in a 6-entry table
    CHECK_THROWS_AS(decompose(20, 3, 6), SeedTooLarge);
    // count past the binomial peak: C(6, 5) = 6 <= 18 but min count is 3
    CHECK_THROWS_AS(decompose(18, 5, 6), SeedTooLarge);
    CHECK_THROWS_AS(decompose(1, 0, 6), InvalidArgument);
    CHECK_THROWS_AS(decompose(0, 7, 6), InvalidArgument);
}

TEST_CASE("compose golden values") {
    CHECK(compose(std::vector<std::uint64_t>{5, 4, 2}) == 18);
    CHECK(compose(std::vector<std::uint64_t>{3, 2, 1, 0}) == 0);
    CHECK(compose(kRealTerms) == kRealSeed);
    CHECK_THROWS_AS(compose(std::vector<std::uint64_t>{4, 4}), InvalidDecomposition);
    CHECK_THROWS_AS(compose(std::vector<std::uint64_t>{2, 3}), InvalidDecomposition);
    CHECK_THROWS_AS(compose(std::vector<std::uint64_t>{}), InvalidDecomposition);
}

TEST_CASE("exhaustive round-trip, injectivity and oracle equality for L <= 16, M <= 5") {
    for (std::uint64_t L = 1; L <= 16; ++L) {
        for (unsigned M = 1; M <= 5 && M <= L; ++M) {
            const BigInt limit = binomial(L, M);
            std::set<std::vector<std::uint64_t>> seen;
            for (BigInt p = 0; p < limit; ++p) {
                // M >= min count holds automatically: p < C(L, M)
                const auto terms = decompose(p, M, L);
                REQUIRE(terms.size() == M);
                for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
                    REQUIRE(terms[i] > terms[i + 1]);
                }
                REQUIRE(compose(terms) == p);
                REQUIRE(decompose_linear(p, M, L) == terms);
                REQUIRE(seen.insert(terms).second); // injective
            }
        }
    }
}

TEST_CASE("oracle equality on 1000 random 128-bit seeds, M = 10, L = 65536") {
    Lcg64 rng(20130107);
    int mismatches = 0;
    std::vector<BigInt> seeds;
    seeds.reserve(1000);
    for (int t = 0; t < 1000; ++t) {
        BigInt s = 0;
        for (int limb = 0; limb < 2; ++limb) {
            s <<= 64;
            s |= BigInt(rng.next64());
        }
        // keep below C(65536, 10) so 10 terms always suffice
        seeds.push_back(s % binomial(65536, 10));
    }
#pragma omp parallel for reduction(+ : mismatches) schedule(dynamic)
    for (int t = 0; t < 1000; ++t) {
        const auto fast = decompose(seeds[t], 10, 65536);
        const auto slow = decompose_linear(seeds[t], 10, 65536);
        if (fast != slow || compose(fast) != seeds[t]) {
            ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}
