// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_EIGEN_HPP
#define LYAP_EIGEN_HPP

#include <vector>

#include "lyap/matrix.hpp"

namespace lyap {

/// Full eigendecomposition of a Hermitian matrix: H = V diag(values) V^*.
/// Values ascending, V unitary.
struct HermitianEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

/// Hermitian eigendecomposition by Householder tridiagonalization followed by
/// implicit-shift QL.  The input is symmetrized as (h + h^*)/2 before
/// reduction; it must be Hermitian to within 1e-12 * ||h|| or an error is
/// raised.
HermitianEigen hermitian_eigen(const DenseMatrix& h);

/// Eigenvalues only (ascending), skipping eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& h);

/// One extreme eigenpair (largest or smallest eigenvalue with a unit
/// eigenvector), computed from the tridiagonal form by inverse iteration.
/// Much cheaper than the full decomposition when only the edge of the
/// spectrum is needed (the numerical-range sweep calls this per angle).
struct ExtremeEigenPair {
  double value;
  Vector vector;
};
ExtremeEigenPair hermitian_extreme(const DenseMatrix& h, bool largest);

/// Complex Schur decomposition A = Q T Q^* with Q unitary and T upper
/// triangular.  The strict lower triangle of t is exactly zero; the diagonal
/// of t holds the eigenvalues in deflation order.
struct SchurDecomposition {
  DenseMatrix q;
  DenseMatrix t;

  std::vector<Complex> eigenvalues() const {
    std::vector<Complex> d(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) {
      d[i] = t(i, i);
    }
    return d;
  }
};

/// Householder Hessenberg reduction followed by single-shift (Wilkinson) QR
/// with deflation threshold eps * (|t_ii| + |t_i+1,i+1|).
SchurDecomposition schur(const DenseMatrix& a);

/// Eigenvalues of a general square matrix (Schur diagonal, deflation order).
std::vector<Complex> eigenvalues(const DenseMatrix& a);

}  // namespace lyap

#endif  // LYAP_EIGEN_HPP
