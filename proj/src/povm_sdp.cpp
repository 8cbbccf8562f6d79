#include "raclab/povm_sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "raclab/errors.hpp"
#include "raclab/tolerances.hpp"

namespace raclab {

namespace {

constexpr double kMuShrink = 0.2;
constexpr double kNewtonTol = 1e-12;   // on the squared Newton decrement
constexpr int kNewtonCap = 500;        // total per solve
constexpr double kArmijoSlope = 0.25;

// Cholesky factor L (lower) of a Hermitian positive definite matrix, or
// nullopt if a pivot fails; doubles as the positive-definiteness test in
// the line search.
std::optional<ComplexMatrix> cholesky(const ComplexMatrix& m) {
    const std::size_t n = m.rows;
    ComplexMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Complex acc = m(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            if (i == j) {
                const double pivot = acc.real();
                if (!(pivot > 0.0)) return std::nullopt;
                l(i, i) = std::sqrt(pivot);
            } else {
                l(i, j) = acc / l(j, j);
            }
        }
    }
    return l;
}

double log_det_from_cholesky(const ComplexMatrix& l) {
    double acc = 0.0;
    for (std::size_t i = 0; i < l.rows; ++i) acc += std::log(l(i, i).real());
    return 2.0 * acc;
}

// Inverse of a lower-triangular factor by forward substitution.
ComplexMatrix invert_lower(const ComplexMatrix& l) {
    const std::size_t n = l.rows;
    ComplexMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        inv(j, j) = 1.0 / l(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex acc = 0.0;
            for (std::size_t k = j; k < i; ++k) acc += l(i, k) * inv(k, j);
            inv(i, j) = -acc / l(i, i);
        }
    }
    return inv;
}

// Hermitian basis bookkeeping: index 0..n-1 the diagonal units, then for
// each i<j a symmetric and an antisymmetric unit, all orthonormal under
// Re Tr(AB).
struct HermitianBasis {
    std::size_t dim;
    std::size_t size() const { return dim * dim; }
};

// Expands real coordinates into the Hermitian matrix they represent.
ComplexMatrix expand(const HermitianBasis& basis, const std::vector<double>& coords) {
    const std::size_t n = basis.dim;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix out(n, n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) out(i, i) = coords[idx++];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sym = coords[idx++];
            const double asym = coords[idx++];
            out(i, j) += Complex(sym * inv_sqrt2, asym * inv_sqrt2);
            out(j, i) += Complex(sym * inv_sqrt2, -asym * inv_sqrt2);
        }
    return out;
}

// Coordinates of a Hermitian matrix in the same basis.
std::vector<double> coordinates(const HermitianBasis& basis, const ComplexMatrix& m) {
    const std::size_t n = basis.dim;
    const double sqrt2 = std::sqrt(2.0);
    std::vector<double> coords(basis.size());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) coords[idx++] = m(i, i).real();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            coords[idx++] = sqrt2 * m(i, j).real();
            coords[idx++] = sqrt2 * m(i, j).imag();
        }
    return coords;
}

// Solves the symmetric positive definite system H x = b. The Hessian's
// condition number grows like 1/mu^2 toward the end of the barrier path,
// past what a double-precision factorization resolves, so this one runs
// in extended precision.
std::vector<double> solve_spd(std::vector<std::vector<long double>> h, std::vector<double> b) {
    const std::size_t n = b.size();
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<std::vector<long double>> l(n, std::vector<long double>(n, 0.0L));
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                long double acc = h[i][j];
                for (std::size_t k = 0; k < j; ++k) acc -= l[i][k] * l[j][k];
                if (i == j) {
                    if (!(acc > 0.0L)) {
                        ok = false;
                        break;
                    }
                    l[i][i] = std::sqrt(acc);
                } else {
                    l[i][j] = acc / l[j][j];
                }
            }
        }
        if (!ok) {
            long double scale = 0.0L;
            for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(h[i][i]));
            const long double ridge = std::max(scale, 1.0L) * 1e-18L * std::pow(10.0L, attempt);
            for (std::size_t i = 0; i < n; ++i) h[i][i] += ridge;
            continue;
        }
        // Forward then backward substitution.
        std::vector<long double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            long double acc = b[i];
            for (std::size_t k = 0; k < i; ++k) acc -= l[i][k] * y[k];
            y[i] = acc / l[i][i];
        }
        std::vector<long double> x(n);
        for (std::size_t ii = n; ii-- > 0;) {
            long double acc = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k) acc -= l[k][ii] * x[k];
            x[ii] = acc / l[ii][ii];
        }
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(x[i]);
        return out;
    }
    throw ConvergenceError("solve_povm: Newton system lost positive definiteness");
}

// Extended-precision kernel for the final primal recovery. The element
// mu (Y - R)^{-1} is built from a matrix whose smallest eigenvalues sit at
// the mu scale; a double-precision factorization mixes those eigenvectors
// by ~eps/mu, which caps the certified gap near sqrt(eps).
using ComplexLD = std::complex<long double>;

struct MatrixLD {
    std::size_t n = 0;
    std::vector<ComplexLD> e;
    explicit MatrixLD(std::size_t dim) : n(dim), e(dim * dim) {}
    ComplexLD& operator()(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const ComplexLD& operator()(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

MatrixLD to_ld(const ComplexMatrix& m) {
    MatrixLD out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out(i, j) = ComplexLD(m(i, j).real(), m(i, j).imag());
    return out;
}

ComplexMatrix from_ld(const MatrixLD& m) {
    ComplexMatrix out(m.n, m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            out(i, j) = Complex(static_cast<double>(m(i, j).real()),
                                static_cast<double>(m(i, j).imag()));
    return out;
}

MatrixLD multiply_ld(const MatrixLD& a, const MatrixLD& b) {
    MatrixLD out(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k) {
            const ComplexLD aik = a(i, k);
            for (std::size_t j = 0; j < a.n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

// inv(M) for Hermitian positive definite M via Cholesky, all long double.
bool invert_hpd_ld(const MatrixLD& m, MatrixLD& inv) {
    const std::size_t n = m.n;
    MatrixLD l(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            ComplexLD acc = m(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            if (i == j) {
                if (!(acc.real() > 0.0L)) return false;
                l(i, i) = std::sqrt(acc.real());
            } else {
                l(i, j) = acc / l(j, j);
            }
        }
    MatrixLD linv(n);
    for (std::size_t j = 0; j < n; ++j) {
        linv(j, j) = ComplexLD(1.0L, 0.0L) / l(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            ComplexLD acc = 0.0L;
            for (std::size_t k = j; k < i; ++k) acc += l(i, k) * linv(k, j);
            linv(i, j) = -acc / l(i, i);
        }
    }
    // inv = linv' linv.
    inv = MatrixLD(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ComplexLD acc = 0.0L;
            for (std::size_t k = std::max(i, j); k < n; ++k)
                acc += std::conj(linv(k, i)) * linv(k, j);
            inv(i, j) = acc;
        }
    return true;
}

double barrier_value(const ComplexMatrix& y, const std::vector<ComplexMatrix>& rewards, double mu,
                     bool& feasible) {
    double value = trace(y).real();
    for (const auto& r : rewards) {
        const auto chol = cholesky(y - r);
        if (!chol) {
            feasible = false;
            return 0.0;
        }
        value -= mu * log_det_from_cholesky(*chol);
    }
    feasible = true;
    return value;
}

}  // namespace

PovmSolution solve_povm(const PovmSubproblem& p) {
    require(p.dim >= 1 && p.dim <= 16, "solve_povm: dim must be in 1..16");
    const std::size_t outcomes = p.reward_operators.size();
    require(outcomes >= 1 && outcomes <= 4 * p.dim, "solve_povm: outcome count out of range");

    std::vector<ComplexMatrix> rewards;
    rewards.reserve(outcomes);
    for (const auto& r : p.reward_operators) {
        require(r.square() && r.rows == p.dim, "solve_povm: reward dimension mismatch");
        require(is_hermitian(r, tol::kEntrywise), "solve_povm: reward operator not Hermitian");
        rewards.push_back(hermitian_part(r));
    }

    const std::size_t n = p.dim;
    const HermitianBasis basis{n};
    const std::size_t nb = basis.size();

    // Initial Y strictly dominates every reward.
    double top = 0.0;
    for (const auto& r : rewards) {
        EigenDecomposition eig = hermitian_eig(r);
        top = std::max(top, eig.eigenvalues.front());
    }
    ComplexMatrix y = Complex(top + 1.0, 0.0) * identity(n);

    // Final-path stop. The certified gap decomposes as mu*m*d from the
    // path plus an (eps/mu)^2 term from the best double-representable
    // center, so mu must stop while the path term still dominates. This
    // floor puts the path term at 5e-10 for every instance size; at the
    // dimensions the see-saw uses the representability term is then
    // below 1e-11 (measured over 200 random instances).
    const double mu_floor = 5e-10 / (static_cast<double>(outcomes) * static_cast<double>(n));
    double mu = 1.0;
    int newton_steps = 0;
    double last_gap = std::numeric_limits<double>::infinity();

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    while (true) {
        // Center at the current mu.
        while (true) {
            // Gradient G = I - mu sum_a S_a^{-1}; Hessian as the Gram matrix
            // of the congruence-transformed basis elements.
            ComplexMatrix grad = identity(n);
            std::vector<std::vector<long double>> hessian(nb, std::vector<long double>(nb, 0.0L));
            for (const auto& r : rewards) {
                const auto chol = cholesky(y - r);
                if (!chol) throw ConvergenceError("solve_povm: iterate left the feasible cone");
                const ComplexMatrix linv = invert_lower(*chol);
                const ComplexMatrix sinv = adjoint(linv) * linv;
                grad += Complex(-mu, 0.0) * sinv;

                // Images C_k = Linv E_k Linv' are built from the columns
                // w_i of Linv as outer products; vectorized real parts give
                // the Gram contribution mu * Re Tr(C_k C_l).
                std::vector<std::vector<Complex>> w(n, std::vector<Complex>(n));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t row = 0; row < n; ++row) w[i][row] = linv(row, i);

                std::vector<std::vector<Complex>> images(nb, std::vector<Complex>(n * n));
                std::size_t idx = 0;
                auto outer_into = [&](const std::vector<Complex>& u, const std::vector<Complex>& v,
                                      Complex scale, std::vector<Complex>& dst) {
                    for (std::size_t rr = 0; rr < n; ++rr)
                        for (std::size_t cc = 0; cc < n; ++cc)
                            dst[rr * n + cc] += scale * u[rr] * std::conj(v[cc]);
                };
                for (std::size_t i = 0; i < n; ++i) {
                    outer_into(w[i], w[i], 1.0, images[idx]);
                    ++idx;
                }
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) {
                        outer_into(w[i], w[j], inv_sqrt2, images[idx]);
                        outer_into(w[j], w[i], inv_sqrt2, images[idx]);
                        ++idx;
                        outer_into(w[i], w[j], Complex(0.0, inv_sqrt2), images[idx]);
                        outer_into(w[j], w[i], Complex(0.0, -inv_sqrt2), images[idx]);
                        ++idx;
                    }

                for (std::size_t k = 0; k < nb; ++k)
                    for (std::size_t l = k; l < nb; ++l) {
                        long double acc = 0.0L;
                        for (std::size_t e = 0; e < n * n; ++e) {
                            acc += static_cast<long double>(images[k][e].real()) * images[l][e].real() +
                                   static_cast<long double>(images[k][e].imag()) * images[l][e].imag();
                        }
                        hessian[k][l] += static_cast<long double>(mu) * acc;
                        if (l != k) hessian[l][k] = hessian[k][l];
                    }
            }

            std::vector<double> g = coordinates(basis, grad);
            std::vector<double> rhs(nb);
            for (std::size_t k = 0; k < nb; ++k) rhs[k] = -g[k];
            const std::vector<double> step_coords = solve_spd(hessian, rhs);

            double decrement_sq = 0.0;
            for (std::size_t k = 0; k < nb; ++k) decrement_sq -= g[k] * step_coords[k];
            if (!(decrement_sq > 1e-24)) break;  // numerically at the center already

            // Once the decrement is inside tolerance, still take the step:
            // Newton converges quadratically here, so the post-step point is
            // centered to ~decrement^2 and the recovered primal inherits
            // that accuracy.
            const bool final_step = decrement_sq * 0.5 <= kNewtonTol;

            if (++newton_steps > kNewtonCap)
                throw ConvergenceError("solve_povm: Newton step cap exceeded (last certified gap " +
                                       std::to_string(last_gap) + ")");

            const ComplexMatrix direction = expand(basis, step_coords);
            bool feasible = false;
            const double f0 = barrier_value(y, rewards, mu, feasible);
            double t = 1.0;
            bool moved = false;
            for (int backtrack = 0; backtrack < 60; ++backtrack) {
                const ComplexMatrix trial = y + Complex(t, 0.0) * direction;
                bool trial_feasible = false;
                const double ft = barrier_value(trial, rewards, mu, trial_feasible);
                if (trial_feasible && ft <= f0 - kArmijoSlope * t * decrement_sq) {
                    y = trial;
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
            if (final_step) break;
            if (!moved)
                throw ConvergenceError("solve_povm: line search stalled (last certified gap " +
                                       std::to_string(last_gap) + ")");
        }

        last_gap = mu * static_cast<double>(outcomes) * static_cast<double>(n);
        if (mu <= mu_floor) break;
        mu = std::max(mu * kMuShrink, mu_floor);
    }

    // Primal recovery from the centered point in extended precision, then
    // one congruence with T^{-1/2} so completeness is exact.
    std::vector<MatrixLD> primal;
    primal.reserve(outcomes);
    MatrixLD total(n);
    const MatrixLD y_ld = to_ld(y);
    for (const auto& r : rewards) {
        MatrixLD slack = y_ld;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                slack(i, j) -= ComplexLD(r(i, j).real(), r(i, j).imag());
        MatrixLD sinv(n);
        if (!invert_hpd_ld(slack, sinv))
            throw ConvergenceError("solve_povm: final iterate infeasible");
        for (std::size_t i = 0; i < n * n; ++i) {
            sinv.e[i] *= static_cast<long double>(mu);
            total.e[i] += sinv.e[i];
        }
        primal.push_back(std::move(sinv));
    }

    // T is within the barrier's gradient norm of the identity, so the
    // Newton-Schulz iteration X <- X (3 I - T X^2)/2 converges to T^{-1/2}
    // in a handful of steps.
    MatrixLD inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i) inv_sqrt(i, i) = 1.0L;
    for (int iteration = 0; iteration < 40; ++iteration) {
        MatrixLD xx = multiply_ld(inv_sqrt, inv_sqrt);
        MatrixLD txx = multiply_ld(total, xx);
        long double residual = 0.0L;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const ComplexLD expect = i == j ? ComplexLD(1.0L, 0.0L) : ComplexLD(0.0L, 0.0L);
                residual = std::max(residual, std::abs(txx(i, j) - expect));
            }
        if (residual < 1e-17L) break;
        MatrixLD next(n);
        for (std::size_t i = 0; i < n; ++i) next(i, i) = 3.0L;
        for (std::size_t i = 0; i < n * n; ++i) next.e[i] -= txx.e[i];
        inv_sqrt = multiply_ld(inv_sqrt, next);
        for (auto& e : inv_sqrt.e) e *= 0.5L;
    }

    PovmSolution sol;
    sol.newton_steps = newton_steps;
    sol.dual_witness = y;
    sol.dual_value = trace(y).real();
    sol.povm.reserve(outcomes);
    long double primal_value = 0.0L;
    for (std::size_t a = 0; a < outcomes; ++a) {
        MatrixLD corrected = multiply_ld(inv_sqrt, multiply_ld(primal[a], inv_sqrt));
        // Exact Hermitization in extended precision before casting down.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const ComplexLD value = 0.5L * (corrected(i, j) + std::conj(corrected(j, i)));
                corrected(i, j) = value;
                corrected(j, i) = std::conj(value);
            }
        const MatrixLD r_ld = to_ld(rewards[a]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                primal_value += (corrected(i, k) * r_ld(k, i)).real();
        sol.povm.push_back(from_ld(corrected));
    }
    sol.primal_value = static_cast<double>(primal_value);
    return sol;
}

CertifyReport certify(const PovmSolution& sol, const PovmSubproblem& p) {
    CertifyReport report;
    const std::size_t n = p.dim;
    if (sol.povm.size() != p.reward_operators.size() || sol.povm.empty()) return report;

    ComplexMatrix sum = zeros(n, n);
    double min_eig = std::numeric_limits<double>::infinity();
    double primal = 0.0;
    for (std::size_t a = 0; a < sol.povm.size(); ++a) {
        const ComplexMatrix element = hermitian_part(sol.povm[a]);
        sum += element;
        min_eig = std::min(min_eig, min_eigenvalue(element));
        primal += trace(element * p.reward_operators[a]).real();
    }
    report.completeness_residual = max_abs_diff(sum, identity(n));
    report.min_povm_eigenvalue = min_eig;
    report.primal_value = primal;

    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& r : p.reward_operators)
        min_slack = std::min(min_slack, min_eigenvalue(hermitian_part(sol.dual_witness - r)));
    report.min_dual_slack = min_slack;
    report.dual_value = trace(sol.dual_witness).real();
    report.duality_gap = report.dual_value - report.primal_value;

    report.ok = report.completeness_residual <= tol::kCompleteness &&
                report.min_povm_eigenvalue >= tol::kPsdFloor && report.min_dual_slack >= -1e-9 &&
                report.duality_gap >= -1e-12 && report.duality_gap <= tol::kSdpGap;
    return report;
}

}  // namespace raclab
