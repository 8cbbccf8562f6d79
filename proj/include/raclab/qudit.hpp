#pragma once

#include "raclab/linalg.hpp"
#include "raclab/rng.hpp"

namespace raclab {

// Which off-diagonal the shift operator populates. The generalized-Pauli
// literature uses both conventions, and this project genuinely needs both:
// the prepare-and-measure protocol is stated with LOWER, the explicit Bell
// measurement family with RAISE. The success values pin the choice, so the
// two are kept as an explicit enum instead of a sign buried in a loop.
//   LOWER: X = sum_k |k><k-1|  (X|j> = |j+1 mod d>)
//   RAISE: X = sum_k |k><k+1|  (X|j> = |j-1 mod d>)
enum class ShiftConvention { Raise, Lower };

// (value mod d) folded into 0..d-1 even for negative inputs. All ket/outcome
// index arithmetic funnels through here; keeping one owner avoids sign
// errors between the two shift conventions.
std::size_t mod_index(long long value, std::size_t d);

// omega^power with omega = e^{2 pi i / d}.
Complex root_of_unity(std::size_t d, long long power);

// Z = sum_k omega^k |k><k|.
ComplexMatrix clock_operator(std::size_t d);

// Permutation matrix per the convention above; unitary with X^d = I.
ComplexMatrix shift_operator(std::size_t d, ShiftConvention conv);

// |e_l> = (1/sqrt d) sum_k omega^{k l} |k>; the Fourier basis is mutually
// unbiased with the computational basis.
Ket fourier_ket(std::size_t d, std::size_t l);

// Computational basis vector |k>.
Ket basis_ket(std::size_t d, std::size_t k);

// (1/sqrt d) sum_k |kk> on dimension d^2; both marginals maximally mixed.
Ket max_entangled(std::size_t d);

// Haar-distributed unitary: orthonormalize a complex Gaussian matrix,
// keeping the triangular factor's diagonal real positive so the
// distribution is exactly left-invariant.
ComplexMatrix random_unitary(std::size_t d, SplitRng& rng);

// Normalized Haar-random state vector.
Ket random_ket(std::size_t d, SplitRng& rng);

}  // namespace raclab
