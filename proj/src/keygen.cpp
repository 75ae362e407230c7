#include "dseq/keygen.hpp"

#include "dseq/error.hpp"
#include "dseq/expand.hpp"

#include <string>

namespace dseq {

namespace {

std::string to_hex(const std::vector<std::uint8_t>& bits) {
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string hex;
    hex.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < bits.size()) nibble |= bits[i + j];
        }
        hex.push_back(digits[nibble]);
    }
    return hex;
}

} // namespace

KeyMaterial derive_key(const KeySpec& spec) {
    if (spec.n_bits == 0)
        throw Error(errc::zero_length, "n_bits must be positive");

    BitSequence stream = map_prime(spec.q, spec.initial_prev_bit);
    const std::uint64_t period = stream.bits.size();
    if (spec.offset >= period)
        throw Error(errc::offset_out_of_range,
                    "offset " + std::to_string(spec.offset) + " >= enhanced length " +
                        std::to_string(period));

    KeyMaterial key;
    key.bits.reserve(spec.n_bits);
    for (std::uint64_t i = 0; i < spec.n_bits; ++i)
        key.bits.push_back(stream.bits[(spec.offset + i) % period]);
    key.hex = to_hex(key.bits);
    return key;
}

} // namespace dseq
