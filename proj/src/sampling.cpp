#include "qsl2q/sampling.hpp"

#include <cmath>

namespace qsl2q {

ComplexMatrix sample_haar_unitary(int n, RandomStream& rng) {
  if (n < 1 || n > ComplexMatrix::kMaxDim)
    throw DimensionMismatch("sample_haar_unitary: dimension must be in [1, 8]");

  ComplexMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();

  // Modified Gram-Schmidt on columns, one reorthogonalization pass. The
  // R diagonal comes out real positive, so no extra phase correction is
  // needed to land on the Haar measure.
  ComplexMatrix q = g;
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cdouble proj = 0.0;
        for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

SpectrumSimplex sample_simplex(int n, RandomStream& rng) {
  if (n < 1) throw OutOfDomainError("sample_simplex: n must be >= 1");
  SpectrumSimplex s;
  s.lambdas.resize(n);
  double total = 0.0;
  do {
    total = 0.0;
    for (double& x : s.lambdas) {
      x = rng.exponential();
      total += x;
    }
  } while (total <= 0.0);
  for (double& x : s.lambdas) x /= total;
  return s;
}

DensityMatrix2Q mixed_state_from(const ComplexMatrix& unitary, const SpectrumSimplex& spectrum) {
  const int n = unitary.dim();
  if (n != 4) throw DimensionMismatch("mixed_state_from: two-qubit states need dimension 4");
  if (static_cast<int>(spectrum.lambdas.size()) != n)
    throw DimensionMismatch("mixed_state_from: spectrum length != unitary dimension");
  DensityMatrix2Q out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cdouble sum = 0.0;
      for (int k = 0; k < n; ++k)
        sum += unitary(i, k) * spectrum.lambdas[k] * std::conj(unitary(j, k));
      out.rho(i, j) = sum;
    }
  }
  return out;
}

DensityMatrix2Q sample_mixed_state(RandomStream& rng) {
  const ComplexMatrix u = sample_haar_unitary(4, rng);
  const SpectrumSimplex d = sample_simplex(4, rng);
  return mixed_state_from(u, d);
}

PureState2Q sample_pure_state(RandomStream& rng) {
  PureState2Q psi;
  for (auto& a : psi.c) a = rng.complex_normal();
  return psi.normalized();
}

}  // namespace qsl2q
