#include "dseq/expand.hpp"

#include "dseq/error.hpp"

#include <algorithm>
#include <string>

namespace dseq {

BitSequence expand_twos(std::span<const std::uint8_t> digits, std::uint8_t initial_prev_bit) {
    if (initial_prev_bit > 1)
        throw Error(errc::digit_out_of_range,
                    "initial_prev_bit must be 0 or 1, got " + std::to_string(initial_prev_bit));

    BitSequence out;
    out.bits.reserve(digits.size());
    std::uint8_t prev = initial_prev_bit;
    for (std::uint8_t d : digits) {
        switch (d) {
        case 0:
        case 1:
            out.bits.push_back(d);
            prev = d;
            break;
        case 2:
            if (prev == 0) {
                out.bits.push_back(0);
                out.bits.push_back(1);
            } else {
                out.bits.push_back(1);
                out.bits.push_back(0);
            }
            prev = out.bits.back();
            ++out.twos_expanded;
            break;
        default:
            throw Error(errc::digit_out_of_range,
                        "digit " + std::to_string(d) + " outside {0,1,2}");
        }
    }
    return out;
}

BitSequence map_prime(std::uint32_t q, std::uint8_t initial_prev_bit) {
    DigitSequence digits = generate_digits(q, 3);
    BitSequence out = expand_twos(digits.digits, initial_prev_bit);
    out.source = digits.params;
    return out;
}

BalancedBitSequence to_balanced_bits(const BitSequence& seq) {
    BalancedBitSequence out;
    out.values.reserve(seq.bits.size());
    for (std::uint8_t b : seq.bits)
        out.values.push_back(b == 0 ? std::int8_t{-1} : std::int8_t{1});
    return out;
}

std::uint64_t count_twos(std::span<const std::uint8_t> digits) {
    for (std::uint8_t d : digits)
        if (d > 2)
            throw Error(errc::digit_out_of_range,
                        "digit " + std::to_string(d) + " outside {0,1,2}");
    return static_cast<std::uint64_t>(std::count(digits.begin(), digits.end(), std::uint8_t{2}));
}

std::uint64_t enhanced_length(std::uint32_t q) {
    DigitSequence seq = generate_digits(q, 3);
    return seq.params.period + count_twos(seq.digits);
}

} // namespace dseq
