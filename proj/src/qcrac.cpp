#include "raclab/qcrac.hpp"

#include <cmath>

#include "raclab/errors.hpp"
#include "raclab/qudit.hpp"
#include "raclab/tolerances.hpp"

namespace raclab {

std::size_t PrepareAndMeasureProtocol::preparation_index(const std::vector<std::size_t>& dits) const {
    require(dits.size() == scenario.n, "preparation_index: wrong dit count");
    std::size_t index = 0;
    std::size_t weight = 1;
    for (std::size_t i = 0; i < dits.size(); ++i) {
        require(dits[i] < scenario.d, "preparation_index: dit out of range");
        index += dits[i] * weight;
        weight *= scenario.d;
    }
    return index;
}

void require_valid_protocol(const PrepareAndMeasureProtocol& p) {
    validate(p.scenario);
    const std::size_t inputs = pow_size(p.scenario.d, p.scenario.n);
    require(p.preparations.size() == inputs, "protocol: wrong preparation count");
    require(p.measurements.size() == p.scenario.n, "protocol: wrong measurement count");
    for (const auto& ket : p.preparations) {
        require(ket.dim == p.scenario.d, "protocol: preparation has wrong dimension");
        require(std::abs(norm(ket) - 1.0) <= tol::kEntrywise, "protocol: preparation not normalized");
    }
    for (const auto& povm : p.measurements) {
        require(povm.size() == p.scenario.d, "protocol: measurement has wrong outcome count");
        require_valid_povm(povm, "protocol");
    }
}

PrepareAndMeasureProtocol explicit_qcrac_protocol(std::size_t d) {
    require(d >= 2, "explicit_qcrac_protocol: d must be >= 2");

    // Seed state |0> + |e_0>, squared norm 2 + 2/sqrt(d).
    Ket seed(d);
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) seed[k] = inv_sqrt_d;
    seed[0] += 1.0;
    Ket phi00 = normalized(seed);

    const ComplexMatrix shift = shift_operator(d, ShiftConvention::Lower);
    const ComplexMatrix clock = clock_operator(d);

    PrepareAndMeasureProtocol protocol;
    protocol.scenario = Scenario{2, d};
    protocol.preparations.resize(d * d);
    for (std::size_t x0 = 0; x0 < d; ++x0) {
        for (std::size_t x1 = 0; x1 < d; ++x1) {
            Ket state = phi00;
            for (std::size_t i = 0; i < x1; ++i) state = apply(clock, state);
            for (std::size_t i = 0; i < x0; ++i) state = apply(shift, state);
            protocol.preparations[protocol.preparation_index({x0, x1})] = std::move(state);
        }
    }

    Povm computational;
    Povm fourier;
    for (std::size_t l = 0; l < d; ++l) {
        computational.push_back(projector(basis_ket(d, l)));
        fourier.push_back(projector(fourier_ket(d, l)));
    }
    protocol.measurements = {std::move(computational), std::move(fourier)};
    return protocol;
}

double sequential_success(const PrepareAndMeasureProtocol& p) {
    require_valid_protocol(p);
    const std::size_t n = p.scenario.n;
    const std::size_t d = p.scenario.d;
    const std::size_t inputs = pow_size(d, n);

    double total = 0.0;
    for (std::size_t input = 0; input < inputs; ++input) {
        const Ket& state = p.preparations[input];
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t target = digit(input, y, d);
            total += expectation(state, p.measurements[y][target]).real();
        }
    }
    return total / (static_cast<double>(n) * static_cast<double>(inputs));
}

double qcrac_analytic(std::size_t d) {
    require(d >= 2, "qcrac_analytic: d must be >= 2");
    return 0.5 + 0.5 / std::sqrt(static_cast<double>(d));
}

}  // namespace raclab
