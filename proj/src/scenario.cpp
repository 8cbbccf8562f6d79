#include "raclab/scenario.hpp"

#include <limits>

#include "raclab/errors.hpp"

namespace raclab {

void validate(const Scenario& s) {
    require(s.n >= 1, "scenario: n must be >= 1");
    require(s.d >= 2, "scenario: d must be >= 2");
}

std::size_t pow_size(std::size_t d, std::size_t exponent) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        require(out <= std::numeric_limits<std::size_t>::max() / d, "pow_size: overflow");
        out *= d;
    }
    return out;
}

std::size_t digit(std::size_t value, std::size_t index, std::size_t d) {
    for (std::size_t i = 0; i < index; ++i) value /= d;
    return value % d;
}

}  // namespace raclab
