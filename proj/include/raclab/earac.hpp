#pragma once

#include <vector>

#include "raclab/povm.hpp"
#include "raclab/scenario.hpp"

namespace raclab {

// Bell-test formulation of an n^(d) -> 1 RAC. Alice measures one of
// d^(n-1) settings (her data string with dit 0 absorbed into the message),
// Bob one of n; the guess succeeds when a + b matches the target dit mod d.
// Uniform averaging over the absorbed dit makes target(x, 0) = 0 and
// target(x, y>=1) = dit y of the setting index, which reproduces the CHSH
// condition a + b = x*y at (n, d) = (2, 2).
struct BellRacInstance {
    Scenario scenario;

    std::size_t alice_settings() const { return pow_size(scenario.d, scenario.n - 1); }
    std::size_t bob_settings() const { return scenario.n; }
    std::size_t outcomes() const { return scenario.d; }

    // Required value of (a + b) mod d for setting pair (x, y).
    std::size_t target(std::size_t x, std::size_t y) const;
};

BellRacInstance bell_rac_instance(std::size_t n, std::size_t d);

// Shared pure state plus one measurement family per party.
struct BipartiteStrategy {
    Ket state;                 // dimension dim_a * dim_b
    MeasurementFamily alice;   // d^(n-1) settings, d outcomes, dimension dim_a
    MeasurementFamily bob;     // n settings, d outcomes, dimension dim_b

    std::size_t dim_a() const { return alice.dim(); }
    std::size_t dim_b() const { return bob.dim(); }
};

void require_valid_strategy(const BipartiteStrategy& s);

// P(a, b | x, y) laid out as a flat array.
struct ProbabilityTable {
    std::size_t alice_settings = 0;
    std::size_t bob_settings = 0;
    std::size_t outcomes = 0;
    std::vector<double> p;

    double& at(std::size_t x, std::size_t y, std::size_t a, std::size_t b) {
        return p[((x * bob_settings + y) * outcomes + a) * outcomes + b];
    }
    double at(std::size_t x, std::size_t y, std::size_t a, std::size_t b) const {
        return p[((x * bob_settings + y) * outcomes + a) * outcomes + b];
    }
};

// P(a,b|x,y) = <psi| A_x^a (x) B_y^b |psi>.
ProbabilityTable probability_table(const BipartiteStrategy& s);

// (1/(n d^(n-1))) sum_{x,y} P(a + b = target(x,y) | x, y).
double bell_rac_value(const BellRacInstance& inst, const ProbabilityTable& table);

// The explicit 2^(3) -> 1 construction on the maximally entangled qutrit
// pair. Alice's seed operator is the rank-one element below; the rest of
// her family is A_x^a = (X^a Z^(a-x)) A_0^0 (X^a Z^(a-x))^dagger with the
// RAISE shift convention, equivalently
//   A_x^a = sum_{k,k'} omega^{(a-x)(k-k')} lambda_{k,k'} |k-a><k'-a|.
// Bob measures the computational basis (y = 0) or the relabeled Fourier
// basis B_1^b = |e_{b+1}><e_{b+1}|. Success value exactly 7/9.
ComplexMatrix explicit_a00();
MeasurementFamily explicit_alice_family();
MeasurementFamily explicit_bob_family();
BipartiteStrategy explicit_earac_strategy();

// Evaluates the explicit strategy through the probability table and
// cross-checks the closed form in the lambda entries; the two paths must
// agree to 1e-12 or an InternalConsistencyError is thrown.
double earac_23_success();

// Maximal CHSH strategy: singlet-equivalent state with the standard
// pi/8-spaced real measurement bases; value cos^2(pi/8) ~ 0.8536.
BipartiteStrategy chsh_optimal_strategy();

}  // namespace raclab
