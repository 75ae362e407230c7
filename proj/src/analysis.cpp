#include "dseq/analysis.hpp"

#include "dseq/error.hpp"
#include "dseq/expand.hpp"
#include "dseq/modmath.hpp"
#include "dseq/sequence.hpp"

#include <string>

namespace dseq {

Correlogram autocorrelation(std::span<const double> values, std::size_t max_lag) {
    const std::size_t n = values.size();
    if (n == 0)
        throw Error(errc::empty_sequence, "autocorrelation of empty sequence");
    if (max_lag >= n)
        throw Error(errc::lag_out_of_range,
                    "max_lag " + std::to_string(max_lag) + " >= length " + std::to_string(n));

    Correlogram out;
    out.n = n;
    out.values.reserve(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t jk = j + k;
            if (jk >= n) jk -= n;
            sum += values[j] * values[jk];
        }
        out.values.push_back(sum / static_cast<double>(n));
    }
    return out;
}

std::vector<std::uint64_t> digit_frequencies(std::span<const std::uint8_t> digits,
                                             std::uint32_t radix) {
    std::vector<std::uint64_t> counts(radix, 0);
    for (std::uint8_t d : digits) {
        if (d >= radix)
            throw Error(errc::digit_out_of_range,
                        "digit " + std::to_string(d) + " >= radix " + std::to_string(radix));
        ++counts[d];
    }
    return counts;
}

bool half_period_complement_holds(std::span<const std::uint8_t> digits) {
    const std::size_t n = digits.size();
    if (n % 2 != 0)
        throw Error(errc::odd_length, "sequence length must be even, got " + std::to_string(n));
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (digits[i] > 1 || digits[i + n / 2] > 1)
            throw Error(errc::digit_out_of_range, "sequence is not binary");
        if (digits[i] + digits[i + n / 2] != 1) return false;
    }
    return true;
}

std::vector<TableRow> build_table(std::span<const std::uint32_t> primes) {
    std::vector<TableRow> rows;
    rows.reserve(primes.size());
    for (std::uint32_t q : primes) {
        if (!modmath::is_prime(q) || q % 3 == 0 || q == 3)
            throw Error(errc::not_prime,
                        std::to_string(q) + " is not a prime coprime to 3");
        DigitSequence seq = generate_digits(q, 3);
        std::uint64_t twos = count_twos(seq.digits);
        rows.push_back({q, seq.params.period, twos, seq.params.period + twos,
                        seq.params.max_length()});
    }
    return rows;
}

std::vector<ScanRecord> scan_twos(std::uint32_t from, std::uint32_t to) {
    if (from < 2 || from > to)
        throw Error(errc::invalid_range,
                    "invalid range [" + std::to_string(from) + ", " + std::to_string(to) + "]");
    std::vector<ScanRecord> records;
    for (std::uint32_t p = from; p <= to; ++p) {
        // Primes up to the radix cannot host a radix-3 sequence.
        if (p <= 3 || !modmath::is_prime(p)) continue;
        DigitSequence seq = generate_digits(p, 3);
        records.push_back({p, count_twos(seq.digits)});
    }
    return records;
}

} // namespace dseq
