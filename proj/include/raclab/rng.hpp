#pragma once

#include <complex>
#include <cstdint>

namespace raclab {

// Counter-based splittable generator (SplitMix64 core). Every stochastic
// routine takes one of these explicitly, and parallel workers get
// independent streams via split(), so runs are bit-reproducible across
// platforms and thread counts. Not cryptographic.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    // Independent stream derived from this seed and a stream index.
    SplitRng split(std::uint64_t stream) const;

    std::uint64_t next_u64();
    double uniform();            // [0, 1)
    double gaussian();           // standard normal, Box-Muller
    std::complex<double> complex_gaussian();  // re, im iid N(0, 1)

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace raclab
