#pragma once

#include <stdexcept>
#include <string>

namespace dseq {

enum class errc {
    modulus_too_small,
    modulus_too_large,
    not_prime,
    not_coprime,
    radix_invalid,
    digit_out_of_range,
    empty_sequence,
    lag_out_of_range,
    odd_length,
    invalid_range,
    offset_out_of_range,
    zero_length,
};

// Domain error for all library operations. CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace dseq
