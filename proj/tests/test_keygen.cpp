#include "dseq/keygen.hpp"

#include "dseq/error.hpp"
#include "dseq/expand.hpp"
#include "dseq/sequence.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace dseq;

TEST_CASE("derive_key worked examples") {
    KeyMaterial full = derive_key({7, 0, 8});
    CHECK(full.bits == std::vector<std::uint8_t>{0, 0, 1, 0, 1, 1, 0, 1});
    CHECK(full.hex == "2D");

    KeyMaterial slice = derive_key({7, 2, 4});
    CHECK(slice.bits == std::vector<std::uint8_t>{1, 0, 1, 1});
    CHECK(slice.hex == "B");

    KeyMaterial wrapped = derive_key({7, 0, 10});
    CHECK(wrapped.bits == std::vector<std::uint8_t>{0, 0, 1, 0, 1, 1, 0, 1, 0, 0});
}

TEST_CASE("partial trailing nibble is right-padded with zeros") {
    KeyMaterial key = derive_key({7, 0, 5}); // bits 0 0 1 0 1 -> nibble 0010, then 1000
    CHECK(key.hex == "28");
}

TEST_CASE("derive_key error paths") {
    CHECK_THROWS_AS(derive_key({8, 0, 8}), Error);
    CHECK_THROWS_AS(derive_key({7, 8, 4}), Error); // enhanced length is 8
    CHECK_THROWS_AS(derive_key({7, 0, 0}), Error);
    try {
        derive_key({7, 100, 4});
    } catch (const Error& e) {
        CHECK(e.code() == errc::offset_out_of_range);
    }
}

TEST_CASE("determinism") {
    KeySpec spec{509, 17, 128};
    KeyMaterial a = derive_key(spec);
    KeyMaterial b = derive_key(spec);
    CHECK(a.bits == b.bits);
    CHECK(a.hex == b.hex);
}

TEST_CASE("wrap and concatenation invariants on random specs") {
    std::mt19937 rng(99);
    const std::uint32_t primes[] = {7, 13, 19, 23, 509, 593};
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t q = primes[rng() % std::size(primes)];
        std::uint64_t period = enhanced_length(q);
        std::uint64_t offset = rng() % period;
        std::uint64_t n = 1 + rng() % 40;
        std::uint64_t m = 1 + rng() % 40;

        KeyMaterial first = derive_key({q, offset, n});
        KeyMaterial second = derive_key({q, (offset + n) % period, m});
        KeyMaterial joint = derive_key({q, offset, n + m});

        std::vector<std::uint8_t> glued = first.bits;
        glued.insert(glued.end(), second.bits.begin(), second.bits.end());
        REQUIRE(glued == joint.bits);
    }
}

TEST_CASE("one full period is bit-balanced against the source digits") {
    for (std::uint32_t q : {7u, 509u}) {
        DigitSequence digits = generate_digits(q, 3);
        auto counts = std::vector<std::uint64_t>(3, 0);
        for (std::uint8_t d : digits.digits) ++counts[d];

        std::uint64_t period = enhanced_length(q);
        KeyMaterial key = derive_key({q, 0, period});
        std::uint64_t ones = 0;
        for (std::uint8_t b : key.bits) ones += b;
        CHECK(ones == counts[1] + counts[2]);
    }
}

TEST_CASE("hex re-parses to exactly the bits") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t n = 1 + rng() % 64;
        KeyMaterial key = derive_key({509, rng() % 677, n});
        REQUIRE(key.hex.size() == (n + 3) / 4);
        std::vector<std::uint8_t> parsed;
        for (char c : key.hex) {
            unsigned nibble = c <= '9' ? static_cast<unsigned>(c - '0')
                                       : static_cast<unsigned>(c - 'A' + 10);
            for (int j = 3; j >= 0; --j)
                parsed.push_back(static_cast<std::uint8_t>((nibble >> j) & 1));
        }
        parsed.resize(n); // drop pad bits
        REQUIRE(parsed == key.bits);
    }
}
