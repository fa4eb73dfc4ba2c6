#ifndef QSL2Q_LINALG_HPP
#define QSL2Q_LINALG_HPP

#include <array>
#include <vector>

#include "qsl2q/complex_matrix.hpp"

namespace qsl2q {

/// Result of a Hermitian eigendecomposition: eigenvalues ascending,
/// matching orthonormal eigenvector columns.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Requires dim <= 8 and hermiticity defect below 1e-9; throws
/// NonHermitianError / NonFiniteError otherwise.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only (ascending in the first m.dim() slots); skips the
/// eigenvector accumulation, which roughly halves the cost in the
/// fidelity inner loops.
std::array<double, ComplexMatrix::kMaxDim> hermitian_eigenvalues(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to
/// zero before the square root; anything below -1e-9 throws NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Singular values (descending in the first m.dim() slots) by one-sided
/// Jacobi column orthogonalization. Exact zeros stay at round-off level,
/// unlike the sqrt-of-eig(A A^dag) route which smears them to ~1e-8.
std::array<double, ComplexMatrix::kMaxDim> singular_values(const ComplexMatrix& m);

}  // namespace qsl2q

#endif  // QSL2Q_LINALG_HPP
