#include "raclab/seesaw.hpp"

#include <cmath>
#include <string>

#include "raclab/errors.hpp"
#include "raclab/parallel.hpp"
#include "raclab/qudit.hpp"
#include "raclab/tolerances.hpp"

namespace raclab {

namespace {

double functional_weight(const BellRacInstance& inst) {
    return 1.0 / (static_cast<double>(inst.bob_settings()) *
                  static_cast<double>(inst.alice_settings()));
}

// Reward operators for every Alice setting at once. The state-side partial
// traces Tr_B[(I (x) B_y^b) rho] do not depend on x, so they are computed
// once and reassembled per setting:
//   R_x^a = w sum_y Tr_B[(I (x) B_y^{target(x,y)-a}) rho].
std::vector<std::vector<ComplexMatrix>> alice_reward_table(const BellRacInstance& inst,
                                                           const Ket& state,
                                                           const MeasurementFamily& bob) {
    const std::size_t db = bob.dim();
    const std::size_t da = state.dim / db;
    const std::size_t d = inst.outcomes();
    const double w = functional_weight(inst);
    const ComplexMatrix rho = projector(state);
    const ComplexMatrix eye_a = identity(da);

    std::vector<std::vector<ComplexMatrix>> traced(inst.bob_settings());
    for (std::size_t y = 0; y < inst.bob_settings(); ++y)
        for (std::size_t b = 0; b < d; ++b)
            traced[y].push_back(partial_trace_B(kron(eye_a, bob.settings[y][b]) * rho, da, db));

    std::vector<std::vector<ComplexMatrix>> rewards(inst.alice_settings());
    for (std::size_t x = 0; x < inst.alice_settings(); ++x) {
        rewards[x].assign(d, zeros(da, da));
        for (std::size_t y = 0; y < inst.bob_settings(); ++y) {
            const std::size_t target = inst.target(x, y);
            for (std::size_t a = 0; a < d; ++a) {
                const std::size_t b =
                    mod_index(static_cast<long long>(target) - static_cast<long long>(a), d);
                rewards[x][a] += Complex(w, 0.0) * traced[y][b];
            }
        }
        for (auto& r : rewards[x]) r = hermitian_part(r);
    }
    return rewards;
}

std::vector<std::vector<ComplexMatrix>> bob_reward_table(const BellRacInstance& inst,
                                                         const Ket& state,
                                                         const MeasurementFamily& alice) {
    const std::size_t da = alice.dim();
    const std::size_t db = state.dim / da;
    const std::size_t d = inst.outcomes();
    const double w = functional_weight(inst);
    const ComplexMatrix rho = projector(state);
    const ComplexMatrix eye_b = identity(db);

    std::vector<std::vector<ComplexMatrix>> traced(inst.alice_settings());
    for (std::size_t x = 0; x < inst.alice_settings(); ++x)
        for (std::size_t a = 0; a < d; ++a)
            traced[x].push_back(partial_trace_A(kron(alice.settings[x][a], eye_b) * rho, da, db));

    std::vector<std::vector<ComplexMatrix>> rewards(inst.bob_settings());
    for (std::size_t y = 0; y < inst.bob_settings(); ++y) {
        rewards[y].assign(d, zeros(db, db));
        for (std::size_t x = 0; x < inst.alice_settings(); ++x) {
            const std::size_t target = inst.target(x, y);
            for (std::size_t a = 0; a < d; ++a) {
                const std::size_t b =
                    mod_index(static_cast<long long>(target) - static_cast<long long>(a), d);
                rewards[y][b] += Complex(w, 0.0) * traced[x][a];
            }
        }
        for (auto& r : rewards[y]) r = hermitian_part(r);
    }
    return rewards;
}

double setting_value(const std::vector<ComplexMatrix>& rewards, const Povm& povm) {
    double acc = 0.0;
    for (std::size_t a = 0; a < rewards.size(); ++a) acc += trace(rewards[a] * povm[a]).real();
    return acc;
}

MeasurementFamily refresh_family(const std::vector<std::vector<ComplexMatrix>>& reward_table,
                                 const MeasurementFamily& incumbent, std::size_t dim,
                                 const char* party) {
    MeasurementFamily updated = incumbent;
    for (std::size_t setting = 0; setting < reward_table.size(); ++setting) {
        PovmSubproblem sub{dim, reward_table[setting]};
        try {
            PovmSolution sol = solve_povm(sub);
            // The incumbent POVM is feasible for the subproblem, so the
            // exact optimum is at least its value; install the solver
            // output only when it improves, which keeps every sweep
            // monotone even at the solver's gap tolerance.
            if (sol.primal_value > setting_value(reward_table[setting], updated.settings[setting]))
                updated.settings[setting] = std::move(sol.povm);
        } catch (const ConvergenceError& err) {
            throw ConvergenceError(std::string(party) + " setting " + std::to_string(setting) +
                                   ": " + err.what());
        }
    }
    return updated;
}

// Random projective initialization with exactly `outcomes` elements: one
// rank-one projector per outcome, with the remaining basis directions (when
// the local dimension exceeds the alphabet) folded into the last element.
MeasurementFamily haar_projective_family(std::size_t settings, std::size_t dim,
                                         std::size_t outcomes, SplitRng& rng) {
    MeasurementFamily family;
    family.settings.reserve(settings);
    for (std::size_t x = 0; x < settings; ++x) {
        Povm basis = projective_from_unitary(random_unitary(dim, rng));
        Povm grouped(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(outcomes));
        for (std::size_t extra = outcomes; extra < dim; ++extra)
            grouped.back() += basis[extra];
        family.settings.push_back(std::move(grouped));
    }
    return family;
}

struct RestartOutcome {
    double value = 0.0;
    BipartiteStrategy strategy;
    std::vector<double> trace;
};

RestartOutcome run_restart(const BellRacInstance& inst, const SeesawConfig& cfg,
                           std::size_t restart, SplitRng rng) {
    const std::size_t da = cfg.dim_a == 0 ? inst.scenario.d : cfg.dim_a;
    const std::size_t db = cfg.dim_b == 0 ? inst.scenario.d : cfg.dim_b;

    require(da >= inst.outcomes() && db >= inst.outcomes(),
            "seesaw: local dimension below the outcome count");

    BipartiteStrategy s;
    SplitRng alice_rng = rng.split(1);
    SplitRng bob_rng = rng.split(2);
    SplitRng state_rng = rng.split(3);
    s.alice = haar_projective_family(inst.alice_settings(), da, inst.outcomes(), alice_rng);
    s.bob = haar_projective_family(inst.bob_settings(), db, inst.outcomes(), bob_rng);
    s.state = (restart == 0 && da == db) ? max_entangled(da) : random_ket(da * db, state_rng);

    RestartOutcome out;
    ComplexMatrix g = bell_operator(inst, s.alice, s.bob);
    double value = expectation(s.state, g).real();
    out.trace.push_back(value);

    for (std::size_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        s.state = state_update(g);
        s.alice = refresh_family(alice_reward_table(inst, s.state, s.bob), s.alice, da, "alice");
        s.bob = refresh_family(bob_reward_table(inst, s.state, s.alice), s.bob, db, "bob");
        g = bell_operator(inst, s.alice, s.bob);
        const double updated = expectation(s.state, g).real();
        out.trace.push_back(updated);
        const double improvement = updated - value;
        value = updated;
        if (improvement < cfg.improvement_floor) break;
    }

    out.value = value;
    out.strategy = std::move(s);
    return out;
}

}  // namespace

ComplexMatrix bell_operator(const BellRacInstance& inst, const MeasurementFamily& alice,
                            const MeasurementFamily& bob) {
    require(alice.setting_count() == inst.alice_settings() &&
                bob.setting_count() == inst.bob_settings(),
            "bell_operator: family shape does not match instance");
    const std::size_t da = alice.dim();
    const std::size_t db = bob.dim();
    const std::size_t d = inst.outcomes();
    const double w = functional_weight(inst);

    ComplexMatrix g = zeros(da * db, da * db);
    for (std::size_t x = 0; x < inst.alice_settings(); ++x)
        for (std::size_t y = 0; y < inst.bob_settings(); ++y) {
            const std::size_t target = inst.target(x, y);
            for (std::size_t a = 0; a < d; ++a) {
                const std::size_t b =
                    mod_index(static_cast<long long>(target) - static_cast<long long>(a), d);
                g += Complex(w, 0.0) * kron(alice.settings[x][a], bob.settings[y][b]);
            }
        }
    return hermitian_part(g);
}

Ket state_update(const ComplexMatrix& bell_op) { return top_eigenpair(bell_op).second; }

MeasurementFamily measurement_update_alice(const BellRacInstance& inst, const Ket& state,
                                           const MeasurementFamily& alice,
                                           const MeasurementFamily& bob) {
    return refresh_family(alice_reward_table(inst, state, bob), alice, alice.dim(), "alice");
}

MeasurementFamily measurement_update_bob(const BellRacInstance& inst, const Ket& state,
                                         const MeasurementFamily& alice,
                                         const MeasurementFamily& bob) {
    return refresh_family(bob_reward_table(inst, state, alice), bob, bob.dim(), "bob");
}

SeesawResult seesaw(const BellRacInstance& inst, const SeesawConfig& cfg) {
    require(cfg.restarts >= 1, "seesaw: restarts must be >= 1");
    require(cfg.improvement_floor > 0.0, "seesaw: improvement_floor must be positive");
    validate(inst.scenario);

    SplitRng root(cfg.seed);
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    parallel_tasks(cfg.restarts, [&](std::size_t r) {
        outcomes[r] = run_restart(inst, cfg, r, root.split(r));
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < cfg.restarts; ++r)
        if (outcomes[r].value > outcomes[best].value) best = r;  // ties: lowest index

    SeesawResult result;
    result.best_value = outcomes[best].value;
    result.strategy = std::move(outcomes[best].strategy);
    result.trace = std::move(outcomes[best].trace);
    result.best_restart = best;
    result.restarts_summary.reserve(cfg.restarts);
    for (const auto& o : outcomes) result.restarts_summary.push_back(o.value);

    // Soundness: the reported value must be realized by the witness through
    // the independent table path.
    const double recomputed = bell_rac_value(inst, probability_table(result.strategy));
    if (std::abs(recomputed - result.best_value) > tol::kDecomposition)
        throw InternalConsistencyError("seesaw: witness does not reproduce reported value");
    return result;
}

}  // namespace raclab
