#pragma once

#include <vector>

#include "raclab/povm.hpp"
#include "raclab/scenario.hpp"

namespace raclab {

// Prepare-and-measure random access code: Alice encodes her data string
// into one of d^n states, Bob applies the measurement picked by y and
// guesses the outcome. Preparations are stored as an explicit enumerated
// table (index = data string with dit 0 least significant) so a protocol
// can be serialized and audited as-is.
struct PrepareAndMeasureProtocol {
    Scenario scenario;
    std::vector<Ket> preparations;       // d^n kets of dimension d
    std::vector<Povm> measurements;      // n POVMs with d outcomes each

    std::size_t preparation_index(const std::vector<std::size_t>& dits) const;
};

void require_valid_protocol(const PrepareAndMeasureProtocol& p);

// The explicit two-dit protocol: |phi_00> = (|0> + |e_0>)/sqrt(2 + 2/sqrt d),
// |phi_{x0 x1}> = X^{x0} Z^{x1} |phi_00> with the LOWER shift convention,
// measured in the computational basis (y = 0) or the Fourier basis (y = 1).
// A regression test pins the d = 3 success value; flipping the shift
// convention breaks it.
PrepareAndMeasureProtocol explicit_qcrac_protocol(std::size_t d);

// Average success (1/(n d^n)) sum_{data, y} <phi| M_y^{x_y} |phi>.
double sequential_success(const PrepareAndMeasureProtocol& p);

// Closed form 1/2 + 1/(2 sqrt d) achieved by explicit_qcrac_protocol.
double qcrac_analytic(std::size_t d);

}  // namespace raclab
