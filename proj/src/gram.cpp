// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/gram.hpp"

#include <cmath>
#include <limits>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"

namespace lyap {

GramInnerProduct GramInnerProduct::make(DenseMatrix g) {
  if (!g.is_square()) {
    throw DimensionError("GramInnerProduct: matrix not square");
  }
  GramInnerProduct ip;
  // Symmetrize first; everything downstream assumes exact Hermitian data.
  ip.g_ = g.hermitian_part();

  // kappa2 from the Hermitian eigenvalues, never from an explicit inverse.
  std::vector<double> w = hermitian_eigenvalues(ip.g_);
  ip.lambda_max_ = w.back();
  ip.lambda_min_ = w.front();
  if (!(ip.lambda_max_ > 0.0)) {
    throw NotPositiveDefiniteError(0, ip.lambda_max_);
  }

  try {
    ip.r_ = cholesky(ip.g_);
    ip.kind_ = FactorKind::Cholesky;
  } catch (const NotPositiveDefiniteError&) {
    // Roundoff pushed the computed G across the definiteness boundary.
    // Fall back to the eigendecomposition square root with small
    // eigenvalues clipped, and flag the distortion.
    HermitianEigen eig = hermitian_eigen(ip.g_);
    const double floor_val = std::numeric_limits<double>::epsilon() * eig.values.back();
    ip.sqrt_vals_.resize(eig.values.size());
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
      double v = eig.values[i];
      if (v < floor_val) {
        v = floor_val;
        ip.clipped_ = true;
      }
      ip.sqrt_vals_[i] = std::sqrt(v);
    }
    ip.evecs_ = eig.vectors;
    DenseMatrix sd = DenseMatrix::diagonal(ip.sqrt_vals_);
    ip.r_ = ip.evecs_ * sd * ip.evecs_.adjoint();
    ip.kind_ = FactorKind::EigenSqrt;
    ip.lambda_min_ = std::max(ip.lambda_min_, floor_val);
  }
  ip.kappa2_ = ip.lambda_max_ / ip.lambda_min_;
  return ip;
}

double GramInnerProduct::sqrt_kappa2() const { return std::sqrt(kappa2_); }

Complex GramInnerProduct::inner(const Vector& v, const Vector& w) const {
  if (v.size() != dim() || w.size() != dim()) {
    throw DimensionError("inner: dimension mismatch");
  }
  return dot(w, matvec(g_, v));
}

double GramInnerProduct::vector_norm(const Vector& v) const {
  if (v.size() != dim()) {
    throw DimensionError("vector_norm: dimension mismatch");
  }
  return norm2(apply_r(v));
}

DenseMatrix GramInnerProduct::apply_r(const DenseMatrix& x) const {
  return r_ * x;
}

Vector GramInnerProduct::apply_r(const Vector& v) const {
  return matvec(r_, v);
}

DenseMatrix GramInnerProduct::apply_r_inv_right(const DenseMatrix& x) const {
  if (kind_ == FactorKind::Cholesky) {
    return solve_triangular(r_, x, Uplo::Upper, Side::Right, Transpose::None);
  }
  // eigen-sqrt: X R^{-1} = X V diag(1/sqrt_vals) V^*
  DenseMatrix y = x * evecs_;
  for (std::size_t j = 0; j < y.cols(); ++j) {
    const double inv = 1.0 / sqrt_vals_[j];
    for (std::size_t i = 0; i < y.rows(); ++i) {
      y(i, j) *= inv;
    }
  }
  return y * evecs_.adjoint();
}

DenseMatrix GramInnerProduct::transform(const DenseMatrix& a) const {
  if (a.rows() != dim() || a.cols() != dim()) {
    throw DimensionError("transform: dimension mismatch");
  }
  return apply_r_inv_right(r_ * a);
}

double GramInnerProduct::matrix_norm(const DenseMatrix& x) const {
  return spectral_norm(transform(x));
}

}  // namespace lyap
