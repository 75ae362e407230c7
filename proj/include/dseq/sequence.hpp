#pragma once

#include <cstdint>
#include <vector>

namespace dseq {

// Prime modulus, radix, and the resulting period (multiplicative order of
// the radix mod q). max_length means the period is q-1, i.e. the radix is
// a primitive root.
struct DSeqParams {
    std::uint32_t q;
    std::uint32_t r;
    std::uint64_t period;

    bool max_length() const noexcept { return period == std::uint64_t{q} - 1; }

    friend bool operator==(const DSeqParams&, const DSeqParams&) = default;
};

// One full period of digits a_i = (r^i mod q) mod r, i starting at 1.
struct DigitSequence {
    DSeqParams params;
    std::vector<std::uint8_t> digits;
};

// Ternary sequence with 2 replaced by -1.
struct BalancedDigitSequence {
    DSeqParams params;
    std::vector<std::int8_t> values;
};

// Generate one period of the digit sequence for prime q and radix r.
// Requires q prime and 2 <= r < q with r not a multiple of q.
DigitSequence generate_digits(std::uint32_t q, std::uint32_t r);

// Pointwise 2 -> -1 on a ternary sequence.
BalancedDigitSequence to_balanced(const DigitSequence& seq);

} // namespace dseq
