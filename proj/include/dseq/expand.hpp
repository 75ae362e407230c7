#pragma once

#include "dseq/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dseq {

// Binary sequence obtained from a ternary one by expanding each 2 into a
// two-bit string. Length = input length + twos_expanded.
struct BitSequence {
    std::vector<std::uint8_t> bits;
    std::optional<DSeqParams> source;
    std::uint64_t twos_expanded = 0;
};

// Bit sequence with 0 mapped to -1.
struct BalancedBitSequence {
    std::vector<std::int8_t> values;
};

// Single left-to-right pass over ternary digits. 0 and 1 pass through; a 2
// becomes "01" when the last emitted bit is 0 and "10" when it is 1. The
// last emitted bit starts at initial_prev_bit, so a leading 2 resolves
// deterministically; callers tiling periods may pass the previous period's
// final bit instead.
BitSequence expand_twos(std::span<const std::uint8_t> digits, std::uint8_t initial_prev_bit = 0);

// Generate the ternary sequence for (q, 3) and expand it.
BitSequence map_prime(std::uint32_t q, std::uint8_t initial_prev_bit = 0);

// Pointwise 0 -> -1, 1 -> 1.
BalancedBitSequence to_balanced_bits(const BitSequence& seq);

// Number of 2s in a ternary digit list.
std::uint64_t count_twos(std::span<const std::uint8_t> digits);

// Period of the (q, 3) sequence plus its count of 2s; the length of the
// expanded bit sequence.
std::uint64_t enhanced_length(std::uint32_t q);

} // namespace dseq
