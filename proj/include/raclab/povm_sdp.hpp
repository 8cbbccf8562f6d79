#pragma once

#include <vector>

#include "raclab/povm.hpp"

namespace raclab {

// Linear POVM optimization: maximize sum_a Tr(A^a R^a) over measurements
// {A^a >= 0, sum_a A^a = I}. This is the see-saw's inner subproblem, one
// instance per measurement setting.
struct PovmSubproblem {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> reward_operators;  // Hermitian, one per outcome
};

// Solved by a log-det barrier on the dual min{Tr Y : Y >= R^a for all a}:
// one dim x dim variable regardless of outcome count, with the primal POVM
// recovered from the barrier gradient A^a = mu (Y - R^a)^{-1} and then
// congruence-corrected to exact completeness. Weak duality makes the
// returned gap a certificate: optimum lies in [primal_value, dual_value].
struct PovmSolution {
    Povm povm;
    double primal_value = 0.0;
    double dual_value = 0.0;
    ComplexMatrix dual_witness;  // Y
    int newton_steps = 0;
};

struct CertifyReport {
    double completeness_residual = 0.0;  // max |sum A^a - I|
    double min_povm_eigenvalue = 0.0;    // over all elements
    double min_dual_slack = 0.0;         // min eig of Y - R^a over a
    double duality_gap = 0.0;            // dual - primal, recomputed
    double primal_value = 0.0;
    double dual_value = 0.0;
    bool ok = false;
};

// Barrier schedule: mu shrinks by 0.2 per outer step from 1.0 down to
// 5e-11/(outcomes*dim); Newton tolerance 1e-12 on the squared decrement;
// hard cap of 500 Newton steps per solve. Initial Y is
// (max_a lambda_max(R^a) + 1) I. Degenerate inputs (all rewards equal,
// single outcome, zero rewards) fall out of the same path with the uniform
// POVM as the recovered primal.
PovmSolution solve_povm(const PovmSubproblem& p);

// Recomputes every residual from scratch; ok iff the solution satisfies
// the documented feasibility and gap bounds.
CertifyReport certify(const PovmSolution& sol, const PovmSubproblem& p);

}  // namespace raclab
