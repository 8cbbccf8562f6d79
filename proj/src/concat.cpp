#include "raclab/concat.hpp"

#include <cmath>

#include "raclab/errors.hpp"
#include "raclab/qudit.hpp"
#include "raclab/tolerances.hpp"

namespace raclab {

void require_valid_distribution(const OutcomeDistribution& dist) {
    require(dist.d >= 1 && dist.probs.size() == dist.d, "outcome distribution: wrong size");
    double sum = 0.0;
    for (double p : dist.probs) {
        require(p >= -tol::kEntrywise, "outcome distribution: negative entry");
        sum += p;
    }
    require(std::abs(sum - 1.0) <= tol::kEntrywise, "outcome distribution: entries must sum to 1");
}

double concat_success(const OutcomeDistribution& outer, const OutcomeDistribution& inner) {
    require_valid_distribution(outer);
    require_valid_distribution(inner);
    require(outer.d == inner.d, "concat_success: alphabet mismatch");
    const std::size_t d = outer.d;
    double acc = 0.0;
    for (std::size_t k = 0; k < d; ++k)
        acc += outer.probs[k] * inner.probs[mod_index(-static_cast<long long>(k), d)];
    return acc;
}

OutcomeDistribution extract_outcome_distribution(const BipartiteStrategy& s,
                                                 const BellRacInstance& inst) {
    const ProbabilityTable table = probability_table(s);
    require(table.alice_settings == inst.alice_settings() &&
                table.bob_settings == inst.bob_settings() && table.outcomes == inst.outcomes(),
            "extract_outcome_distribution: strategy does not match instance");
    const std::size_t d = inst.outcomes();

    OutcomeDistribution dist;
    dist.d = d;
    dist.probs.assign(d, 0.0);
    const double weight = 1.0 / (static_cast<double>(inst.alice_settings()) *
                                 static_cast<double>(inst.bob_settings()));
    for (std::size_t x = 0; x < inst.alice_settings(); ++x)
        for (std::size_t y = 0; y < inst.bob_settings(); ++y) {
            const std::size_t target = inst.target(x, y);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    const std::size_t displacement =
                        mod_index(static_cast<long long>(a + b) - static_cast<long long>(target), d);
                    dist.probs[displacement] += weight * table.at(x, y, a, b);
                }
        }
    return dist;
}

}  // namespace raclab
