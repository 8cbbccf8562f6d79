#pragma once

#include <cstddef>

namespace raclab {

// An n^(d) -> 1 random access code: n data dits of alphabet size d, one
// d-level message.
struct Scenario {
    std::size_t n = 0;  // number of data dits, >= 1
    std::size_t d = 0;  // alphabet size, >= 2

    bool operator==(const Scenario&) const = default;
};

void validate(const Scenario& s);

// d^exponent with overflow checking (these counts index enumeration tables).
std::size_t pow_size(std::size_t d, std::size_t exponent);

// Base-d digit `index` of `value` (digit 0 least significant).
std::size_t digit(std::size_t value, std::size_t index, std::size_t d);

}  // namespace raclab
