#include "raclab/rng.hpp"

#include <cmath>

namespace raclab {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitRng SplitRng::split(std::uint64_t stream) const {
    // Hash (state, stream) into a fresh seed; streams never overlap in
    // practice because the mix is a bijection over 64-bit words.
    return SplitRng(mix64(state_ ^ mix64(stream + 0x632be59bd9b4e019ULL)));
}

std::uint64_t SplitRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitRng::uniform() {
    // 53 random bits -> [0,1) with full double resolution.
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::gaussian() {
    // Explicit Box-Muller rather than std::normal_distribution: the libc++
    // and libstdc++ implementations draw differently, and reproducibility
    // across platforms is part of the contract.
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> SplitRng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

}  // namespace raclab
