#pragma once

#include <cstdint>
#include <vector>

#include "raclab/earac.hpp"
#include "raclab/povm_sdp.hpp"

namespace raclab {

struct SeesawConfig {
    Scenario scenario;
    std::size_t dim_a = 0;  // 0 = use scenario.d
    std::size_t dim_b = 0;
    std::size_t restarts = 20;
    std::size_t max_sweeps = 200;
    double improvement_floor = 1e-9;
    std::uint64_t seed = 1;
};

struct SeesawResult {
    double best_value = 0.0;
    BipartiteStrategy strategy;              // witness achieving best_value
    std::vector<double> trace;               // per-sweep objective, best restart
    std::vector<double> restarts_summary;    // final value per restart
    std::size_t best_restart = 0;
};

// Bell operator G with Tr(rho G) equal to the RAC functional for the given
// measurement families.
ComplexMatrix bell_operator(const BellRacInstance& inst, const MeasurementFamily& alice,
                            const MeasurementFamily& bob);

// Optimal state for fixed measurements: unit top eigenvector of G (ties
// break to the eigensolver's first column).
Ket state_update(const ComplexMatrix& bell_op);

// Per-setting POVM refresh via solve_povm against the reward operators
// induced by the state and the other party's family. A setting's POVM is
// replaced only when the subproblem value improves on it, so the overall
// objective never decreases.
MeasurementFamily measurement_update_alice(const BellRacInstance& inst, const Ket& state,
                                           const MeasurementFamily& alice,
                                           const MeasurementFamily& bob);
MeasurementFamily measurement_update_bob(const BellRacInstance& inst, const Ket& state,
                                         const MeasurementFamily& alice,
                                         const MeasurementFamily& bob);

// Alternating maximization, best over seeded restarts. Restart 0 starts
// from the maximally entangled state, later restarts from Haar-random
// states; measurements always start as Haar-random projective bases. Sweep
// order is state, then Alice, then Bob. Restarts run in parallel on
// independent streams with a deterministic reduction, so results do not
// depend on thread count.
SeesawResult seesaw(const BellRacInstance& inst, const SeesawConfig& cfg);

}  // namespace raclab
