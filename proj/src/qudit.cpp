#include "raclab/qudit.hpp"

#include <cmath>

#include "raclab/errors.hpp"

namespace raclab {

std::size_t mod_index(long long value, std::size_t d) {
    const long long m = static_cast<long long>(d);
    long long r = value % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

Complex root_of_unity(std::size_t d, long long power) {
    // Reduce first so the angle stays small and sin/cos stay accurate.
    const double angle = 2.0 * M_PI * static_cast<double>(mod_index(power, d)) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

ComplexMatrix clock_operator(std::size_t d) {
    require(d >= 1, "clock_operator: d must be >= 1");
    ComplexMatrix z(d, d);
    for (std::size_t k = 0; k < d; ++k) z(k, k) = root_of_unity(d, static_cast<long long>(k));
    return z;
}

ComplexMatrix shift_operator(std::size_t d, ShiftConvention conv) {
    require(d >= 1, "shift_operator: d must be >= 1");
    ComplexMatrix x(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t col = conv == ShiftConvention::Lower
                                    ? mod_index(static_cast<long long>(k) - 1, d)
                                    : mod_index(static_cast<long long>(k) + 1, d);
        x(k, col) = 1.0;
    }
    return x;
}

Ket fourier_ket(std::size_t d, std::size_t l) {
    require(d >= 1 && l < d, "fourier_ket: index out of range");
    Ket e(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k)
        e[k] = scale * root_of_unity(d, static_cast<long long>(k * l));
    return e;
}

Ket basis_ket(std::size_t d, std::size_t k) {
    require(k < d, "basis_ket: index out of range");
    Ket b(d);
    b[k] = 1.0;
    return b;
}

Ket max_entangled(std::size_t d) {
    require(d >= 1, "max_entangled: d must be >= 1");
    Ket psi(d * d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) psi[k * d + k] = scale;
    return psi;
}

ComplexMatrix random_unitary(std::size_t d, SplitRng& rng) {
    require(d >= 1, "random_unitary: d must be >= 1");
    // Modified Gram-Schmidt on a Ginibre matrix, then multiply each column
    // by r_jj/|r_jj|. Without the phase correction the QR map is not
    // measure-preserving onto U(d).
    std::vector<Ket> cols(d, Ket(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) cols[j][i] = rng.complex_gaussian();

    ComplexMatrix u(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex proj = 0.0;
            for (std::size_t i = 0; i < d; ++i) proj += std::conj(u(i, k)) * cols[j][i];
            for (std::size_t i = 0; i < d; ++i) cols[j][i] -= proj * u(i, k);
        }
        // Normalizing by the real positive residual norm forces the
        // triangular factor's diagonal to be real positive, which is the
        // phase-canonical QR that makes Q exactly Haar.
        double nrm = 0.0;
        for (std::size_t i = 0; i < d; ++i) nrm += std::norm(cols[j][i]);
        nrm = std::sqrt(nrm);
        require(nrm > 1e-300, "random_unitary: degenerate Gaussian draw");
        for (std::size_t i = 0; i < d; ++i) u(i, j) = cols[j][i] / nrm;
    }
    return u;
}

Ket random_ket(std::size_t d, SplitRng& rng) {
    Ket v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rng.complex_gaussian();
    return normalized(v);
}

}  // namespace raclab
