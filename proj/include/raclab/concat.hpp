#pragma once

#include <vector>

#include "raclab/earac.hpp"

namespace raclab {

// Displacement statistics of a RAC strategy: probs[k] is the probability
// that the decoded value lands target + k (mod d), averaged over settings.
// probs[0] is the success probability.
struct OutcomeDistribution {
    std::size_t d = 0;
    std::vector<double> probs;
};

void require_valid_distribution(const OutcomeDistribution& dist);

// Success probability of running the codes in two levels, with the outer
// code addressing a block and the inner code the dit inside it. The decode
// succeeds when the two displacement errors cancel:
//   sum_k outer[k] * inner[-k mod d].
// For a symmetric-error code composed with itself this is
// p^2 + sum_{k != 0} q_k^2.
double concat_success(const OutcomeDistribution& outer, const OutcomeDistribution& inner);

// Measures probs[k] = averaged P(a + b = target(x,y) + k) of a strategy.
OutcomeDistribution extract_outcome_distribution(const BipartiteStrategy& s,
                                                 const BellRacInstance& inst);

}  // namespace raclab
