#include "dseq/sequence.hpp"

#include "dseq/error.hpp"
#include "dseq/modmath.hpp"

#include <string>

namespace dseq {

DigitSequence generate_digits(std::uint32_t q, std::uint32_t r) {
    if (!modmath::is_prime(q))
        throw Error(errc::not_prime, std::to_string(q) + " is not prime");
    if (r < 2 || r >= q || r % q == 0)
        throw Error(errc::radix_invalid,
                    "radix " + std::to_string(r) + " invalid for q=" + std::to_string(q));

    std::uint64_t period = modmath::multiplicative_order(r, q);

    DigitSequence seq;
    seq.params = {q, r, period};
    seq.digits.reserve(period);

    // rem_i = r^i mod q, updated incrementally; digit is rem_i mod r.
    std::uint64_t rem = 1;
    for (std::uint64_t i = 0; i < period; ++i) {
        rem = rem * r % q;
        seq.digits.push_back(static_cast<std::uint8_t>(rem % r));
    }
    return seq;
}

BalancedDigitSequence to_balanced(const DigitSequence& seq) {
    if (seq.params.r != 3)
        throw Error(errc::radix_invalid,
                    "balanced form requires radix 3, got " + std::to_string(seq.params.r));

    BalancedDigitSequence out;
    out.params = seq.params;
    out.values.reserve(seq.digits.size());
    for (std::uint8_t d : seq.digits)
        out.values.push_back(d == 2 ? std::int8_t{-1} : static_cast<std::int8_t>(d));
    return out;
}

} // namespace dseq
