#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dseq {

// Normalized cyclic autocorrelation values c(k) for k = 0..max_lag,
// c(k) = (1/n) sum_j v[j] * v[(j+k) mod n].
struct Correlogram {
    std::size_t n;
    std::vector<double> values;
};

// Per-prime statistics for the ternary sequence and its binary expansion.
struct TableRow {
    std::uint32_t prime;
    std::uint64_t period;
    std::uint64_t twos;
    std::uint64_t enhanced_length;
    bool max_length;
};

// Count of 2s in one period of the (prime, 3) sequence.
struct ScanRecord {
    std::uint32_t prime;
    std::uint64_t twos;
};

Correlogram autocorrelation(std::span<const double> values, std::size_t max_lag);

// Occurrence counts of each digit value 0..radix-1; sums to the length.
std::vector<std::uint64_t> digit_frequencies(std::span<const std::uint8_t> digits, std::uint32_t radix);

// For a binary sequence of even length n: true iff bit i and bit i + n/2
// sum to 1 for every i < n/2.
bool half_period_complement_holds(std::span<const std::uint8_t> digits);

// One row per prime, input order preserved. Each entry must be prime and
// coprime to 3.
std::vector<TableRow> build_table(std::span<const std::uint32_t> primes);

// Records for every prime p in [from, to] with gcd(3, p) = 1, ascending.
std::vector<ScanRecord> scan_twos(std::uint32_t from, std::uint32_t to);

} // namespace dseq
