#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace raclab {

using Complex = std::complex<double>;

// Dense complex matrix, row-major, value semantics. Everything in this
// project lives in Hilbert-space dimensions up to a few dozen, so there is
// no sparsity and no attempt at cache blocking; copies are cheap and the
// optimizer loop never aliases buffers across operations.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> entries;  // row-major, size rows*cols

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Complex& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool square() const { return rows == cols; }
};

// Normalized column vector |psi> = sum_k amplitudes[k] |k>.
struct Ket {
    std::size_t dim = 0;
    std::vector<Complex> amplitudes;

    Ket() = default;
    explicit Ket(std::size_t d) : dim(d), amplitudes(d) {}
    Ket(std::size_t d, std::vector<Complex> a) : dim(d), amplitudes(std::move(a)) {}

    Complex& operator[](std::size_t k) { return amplitudes[k]; }
    const Complex& operator[](std::size_t k) const { return amplitudes[k]; }
};

// Spectral data of a Hermitian matrix: eigenvalues sorted descending with
// matching orthonormal eigenvectors.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<Ket> eigenvectors;
};

// -- construction --------------------------------------------------------

ComplexMatrix identity(std::size_t d);
ComplexMatrix zeros(std::size_t rows, std::size_t cols);
ComplexMatrix diagonal(const std::vector<Complex>& entries);

// |a><b| (outer product); projector(v) = |v><v|.
ComplexMatrix outer(const Ket& a, const Ket& b);
ComplexMatrix projector(const Ket& v);

// -- arithmetic ----------------------------------------------------------

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);
ComplexMatrix& operator+=(ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

Ket apply(const ComplexMatrix& m, const Ket& v);
Complex inner(const Ket& a, const Ket& b);          // <a|b>
Complex expectation(const Ket& v, const ComplexMatrix& m);  // <v|M|v>

double norm(const Ket& v);
Ket normalized(const Ket& v);

// -- measures ------------------------------------------------------------

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tolerance);
ComplexMatrix hermitian_part(const ComplexMatrix& m);  // (M + M')/2

// -- tensor structure ----------------------------------------------------

// Kronecker product; (kron(A,B))[(i*dB+k)][(j*dB+l)] = A[i][j]*B[k][l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial traces of a matrix on C^dA (x) C^dB with index (i*dB + k).
// Both are trace preserving up to the obvious dimension bookkeeping:
//   Tr(partial_trace_B(M)) = Tr(M), and for all A, B
//   Tr_A(A * partial_trace_B((I(x)B) M)) = Tr(M (A(x)B)).
ComplexMatrix partial_trace_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix partial_trace_A(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

// -- eigendecomposition --------------------------------------------------

// Cyclic Jacobi for Hermitian matrices. Converges when the off-diagonal
// Frobenius mass drops below tol::kJacobiOffDiag (relative to the matrix
// scale), capped at tol::kJacobiMaxSweeps sweeps. Dimension cap 64.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Largest eigenvalue and a matching unit eigenvector (ties: the
// eigensolver's first column, which is deterministic).
std::pair<double, Ket> top_eigenpair(const ComplexMatrix& m);

// Smallest eigenvalue only; the PSD checks need nothing else.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace raclab
