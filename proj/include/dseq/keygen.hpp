#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dseq {

// Which slice of the expanded bit stream to extract. The stream for (q, 3)
// is tiled cyclically, so offset + n_bits may exceed one period.
struct KeySpec {
    std::uint32_t q;
    std::uint64_t offset = 0;
    std::uint64_t n_bits = 0;
    std::uint8_t initial_prev_bit = 0;
};

// Extracted bits plus their hex rendering: MSB-first, a trailing partial
// nibble is right-padded with zero bits, ceil(n_bits/4) hex digits.
//
// These bits are pseudorandom, not cryptographically vetted; treat the
// output as deterministic key material, not as entropy.
struct KeyMaterial {
    std::vector<std::uint8_t> bits;
    std::string hex;
};

KeyMaterial derive_key(const KeySpec& spec);

} // namespace dseq
