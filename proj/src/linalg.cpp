#include "raclab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "raclab/errors.hpp"
#include "raclab/tolerances.hpp"

namespace raclab {

ComplexMatrix identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix diagonal(const std::vector<Complex>& entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix outer(const Ket& a, const Ket& b) {
    ComplexMatrix m(a.dim, b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) m(i, j) = a[i] * std::conj(b[j]);
    return m;
}

ComplexMatrix projector(const Ket& v) { return outer(v, v); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows == b.rows && a.cols == b.cols, "matrix addition: shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows == b.rows && a.cols == b.cols, "matrix subtraction: shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] -= b.entries[i];
    return out;
}

ComplexMatrix& operator+=(ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows == b.rows && a.cols == b.cols, "matrix addition: shape mismatch");
    for (std::size_t i = 0; i < a.entries.size(); ++i) a.entries[i] += b.entries[i];
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols == b.rows, "matrix product: inner dimension mismatch");
    ComplexMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    ComplexMatrix out = m;
    for (auto& e : out.entries) e *= scale;
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    ComplexMatrix out = m;
    for (auto& e : out.entries) e = std::conj(e);
    return out;
}

Complex trace(const ComplexMatrix& m) {
    require(m.square(), "trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

Ket apply(const ComplexMatrix& m, const Ket& v) {
    require(m.cols == v.dim, "apply: dimension mismatch");
    Ket out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Complex inner(const Ket& a, const Ket& b) {
    require(a.dim == b.dim, "inner: dimension mismatch");
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.dim; ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

Complex expectation(const Ket& v, const ComplexMatrix& m) { return inner(v, apply(m, v)); }

double norm(const Ket& v) {
    double acc = 0.0;
    for (const auto& a : v.amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

Ket normalized(const Ket& v) {
    const double n = norm(v);
    require(n > 0.0, "normalized: zero vector");
    Ket out = v;
    for (auto& a : out.amplitudes) a /= n;
    return out;
}

double max_abs(const ComplexMatrix& m) {
    double best = 0.0;
    for (const auto& e : m.entries) best = std::max(best, std::abs(e));
    return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows == b.rows && a.cols == b.cols, "max_abs_diff: shape mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        best = std::max(best, std::abs(a.entries[i] - b.entries[i]));
    return best;
}

double frobenius_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (const auto& e : m.entries) acc += std::norm(e);
    return std::sqrt(acc);
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i; j < m.cols; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tolerance) return false;
    return true;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    require(m.square(), "hermitian_part: matrix must be square");
    ComplexMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.square() && b.square(), "kron: both factors must be square");
    const std::size_t da = a.rows, db = b.rows;
    ComplexMatrix out(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    require(m.square() && m.rows == dim_a * dim_b, "partial_trace_B: dimension mismatch");
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_a; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim_b; ++k) acc += m(i * dim_b + k, j * dim_b + k);
            out(i, j) = acc;
        }
    return out;
}

ComplexMatrix partial_trace_A(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    require(m.square() && m.rows == dim_a * dim_b, "partial_trace_A: dimension mismatch");
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t k = 0; k < dim_b; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < dim_a; ++i) acc += m(i * dim_b + k, i * dim_b + l);
            out(k, l) = acc;
        }
    return out;
}

namespace {

// One two-sided Jacobi rotation zeroing entry (p,q) of the Hermitian work
// matrix. The 2x2 block [[app, b],[conj(b), aqq]] with b = |b| e^{i alpha}
// factors as P' B P (P = diag(1, e^{i alpha}), B real symmetric), so the
// classic real rotation angle applies once the phase alpha is peeled off.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = m(p, q);
    const double beta = std::abs(apq);
    if (beta == 0.0) return;
    const Complex phase = apq / beta;  // e^{i alpha}
    const double app = m(p, p).real();
    const double aqq = m(q, q).real();

    const double tau = (aqq - app) / (2.0 * beta);
    double t;
    if (tau == 0.0) {
        t = 1.0;
    } else {
        t = (tau > 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex u_pp = c;
    const Complex u_pq = s;
    const Complex u_qp = -s * std::conj(phase);
    const Complex u_qq = c * std::conj(phase);

    const std::size_t n = m.rows;
    // M <- M U (columns p, q).
    for (std::size_t i = 0; i < n; ++i) {
        const Complex mp = m(i, p), mq = m(i, q);
        m(i, p) = mp * u_pp + mq * u_qp;
        m(i, q) = mp * u_pq + mq * u_qq;
    }
    // M <- U' M (rows p, q).
    for (std::size_t j = 0; j < n; ++j) {
        const Complex mp = m(p, j), mq = m(q, j);
        m(p, j) = std::conj(u_pp) * mp + std::conj(u_qp) * mq;
        m(q, j) = std::conj(u_pq) * mp + std::conj(u_qq) * mq;
    }
    // Kill roundoff in the entries the rotation is meant to pin.
    m(p, q) = 0.0;
    m(q, p) = 0.0;
    m(p, p) = Complex(m(p, p).real(), 0.0);
    m(q, q) = Complex(m(q, q).real(), 0.0);

    // V <- V U accumulates eigenvectors in the columns.
    for (std::size_t i = 0; i < n; ++i) {
        const Complex vp = v(i, p), vq = v(i, q);
        v(i, p) = vp * u_pp + vq * u_qp;
        v(i, q) = vp * u_pq + vq * u_qq;
    }
}

double off_diagonal_frobenius(const ComplexMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j) acc += std::norm(m(i, j));
    return std::sqrt(acc);
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& input) {
    require(input.square(), "hermitian_eig: matrix must be square");
    require(input.rows >= 1 && input.rows <= 64, "hermitian_eig: dimension must be in 1..64");
    require(is_hermitian(input, tol::kEntrywise), "hermitian_eig: matrix is not Hermitian");

    const std::size_t n = input.rows;
    // Work on the exactly Hermitian part so roundoff in the input cannot
    // leak into complex diagonal entries.
    ComplexMatrix m = hermitian_part(input);
    ComplexMatrix v = identity(n);

    const double scale = std::max(1.0, frobenius_norm(m));
    const double threshold = tol::kJacobiOffDiag * scale;

    bool converged = (n == 1) || off_diagonal_frobenius(m) < threshold;
    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(m, v, p, q);
        converged = off_diagonal_frobenius(m) < threshold;
    }
    if (!converged)
        throw ConvergenceError("hermitian_eig: Jacobi did not converge within sweep cap");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m(a, a).real() > m(b, b).real(); });

    EigenDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(m(k, k).real());
        Ket vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
        out.eigenvectors.push_back(std::move(vec));
    }
    return out;
}

std::pair<double, Ket> top_eigenpair(const ComplexMatrix& m) {
    EigenDecomposition eig = hermitian_eig(m);
    return {eig.eigenvalues.front(), eig.eigenvectors.front()};
}

double min_eigenvalue(const ComplexMatrix& m) {
    EigenDecomposition eig = hermitian_eig(m);
    return eig.eigenvalues.back();
}

}  // namespace raclab
