#pragma once

#include <cstdint>

namespace dseq::modmath {

// Value in [0, modulus). Products of two residues are computed in 64-bit
// arithmetic, hence the 2^32 cap on the modulus.
struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

// (base^exponent) mod modulus by square-and-multiply.
Residue mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

// Deterministic trial division; exact for n < 2^32.
bool is_prime(std::uint64_t n);

// Smallest t > 0 with r^t = 1 (mod q); q must be prime and coprime to r.
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q);

// True iff the order of r mod q is q - 1.
bool is_primitive_root(std::uint64_t r, std::uint64_t q);

} // namespace dseq::modmath
