#include "dseq/modmath.hpp"

#include "dseq/error.hpp"

#include <numeric>
#include <vector>

namespace dseq::modmath {

namespace {

void check_modulus(std::uint64_t modulus) {
    if (modulus < 2)
        throw Error(errc::modulus_too_small, "modulus must be >= 2, got " + std::to_string(modulus));
    if (modulus >= kMaxModulus)
        throw Error(errc::modulus_too_large, "modulus must be < 2^32, got " + std::to_string(modulus));
}

// Prime factors of n, each listed once. Trial division; n here is at most q-1 < 2^32.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            factors.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

} // namespace

Residue mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    check_modulus(modulus);
    std::uint64_t result = 1 % modulus;
    std::uint64_t b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return {result, modulus};
}

bool is_prime(std::uint64_t n) {
    if (n >= kMaxModulus)
        throw Error(errc::modulus_too_large, "primality test limited to n < 2^32, got " + std::to_string(n));
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q) {
    if (!is_prime(q))
        throw Error(errc::not_prime, std::to_string(q) + " is not prime");
    if (r % q == 0)
        throw Error(errc::not_coprime, std::to_string(r) + " is not coprime to " + std::to_string(q));

    // The order divides q-1. Start from q-1 and strip prime factors while
    // the power stays 1.
    std::uint64_t order = q - 1;
    for (std::uint64_t p : distinct_prime_factors(q - 1)) {
        while (order % p == 0 && mod_pow(r, order / p, q).value == 1)
            order /= p;
    }
    return order;
}

bool is_primitive_root(std::uint64_t r, std::uint64_t q) {
    return multiplicative_order(r, q) == q - 1;
}

} // namespace dseq::modmath
