// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_GRAM_HPP
#define LYAP_GRAM_HPP

#include <vector>

#include "lyap/matrix.hpp"

namespace lyap {

enum class FactorKind { Cholesky, EigenSqrt };

/// A Hermitian positive definite G packaged as an inner product
/// <v,w>_G = w^* G v, with a factor R satisfying R^* R = G and the spectral
/// condition number kappa2 = lambda_max(G) / lambda_min(G).
///
/// The factor is Cholesky when G admits one numerically; otherwise the
/// Hermitian eigendecomposition square root is used, with eigenvalues below
/// eps * lambda_max clipped up to that level (clipped() reports this).
/// R^{-1} is never formed: applications go through triangular solves, or
/// through the eigenbasis for the eigen-sqrt factor.
class GramInnerProduct {
 public:
  static GramInnerProduct make(DenseMatrix g);

  const DenseMatrix& g() const { return g_; }
  const DenseMatrix& r() const { return r_; }
  FactorKind factor_kind() const { return kind_; }
  double kappa2() const { return kappa2_; }
  double sqrt_kappa2() const;
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }
  bool clipped() const { return clipped_; }
  std::size_t dim() const { return g_.rows(); }

  /// <v,w>_G = w^* G v.
  Complex inner(const Vector& v, const Vector& w) const;
  /// ||v||_G = ||R v||_2.
  double vector_norm(const Vector& v) const;
  /// ||X||_G = ||R X R^{-1}||_2.
  double matrix_norm(const DenseMatrix& x) const;
  /// A_G = R A R^{-1}.
  DenseMatrix transform(const DenseMatrix& a) const;

  DenseMatrix apply_r(const DenseMatrix& x) const;
  Vector apply_r(const Vector& v) const;
  /// X R^{-1} without forming the inverse.
  DenseMatrix apply_r_inv_right(const DenseMatrix& x) const;

 private:
  GramInnerProduct() = default;

  DenseMatrix g_;
  DenseMatrix r_;
  FactorKind kind_ = FactorKind::Cholesky;
  double kappa2_ = 1.0;
  double lambda_min_ = 1.0;
  double lambda_max_ = 1.0;
  bool clipped_ = false;
  // eigen-sqrt data: r_ = evecs * diag(sqrt_vals) * evecs^*
  DenseMatrix evecs_;
  std::vector<double> sqrt_vals_;
};

}  // namespace lyap

#endif  // LYAP_GRAM_HPP
