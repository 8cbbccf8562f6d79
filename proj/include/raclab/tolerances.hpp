#pragma once

// Central numerical tolerances. Library code and tests share these, so a
// change here is felt everywhere at once.
namespace raclab::tol {

inline constexpr double kEntrywise = 1e-12;       // entrywise matrix/ket algebra
inline constexpr double kDecomposition = 1e-10;   // eigendecomposition residuals
inline constexpr double kPsdFloor = -1e-10;       // smallest admissible POVM eigenvalue
inline constexpr double kCompleteness = 1e-10;    // max |sum of POVM elements - I|
inline constexpr double kSdpGap = 1e-8;           // certified duality-gap bound
inline constexpr double kJacobiOffDiag = 1e-14;   // off-diagonal Frobenius mass at convergence
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace raclab::tol
