// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_GMRES_HPP
#define LYAP_GMRES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lyap/matrix.hpp"

namespace lyap {

struct GmresOptions {
  std::size_t max_iter = 0;  // 0 means the matrix dimension
  double rtol = 0.0;
  bool capture_basis = false;  // keep V_{k+1} and the Hessenberg for checks
};

/// Residual history of one full (non-restarted) GMRES run in the Euclidean
/// inner product with x_0 = 0.  rel_residuals[k] = ||b - A x_k||_2 / ||b||_2,
/// entry 0 is exactly 1; the sequence is non-increasing by optimality.
struct GmresTrace {
  std::vector<double> rel_residuals;
  std::size_t iterations = 0;
  bool breakdown = false;  // happy breakdown: exact solution reached
  std::uint64_t seed = 0;
  std::string label;
  Vector solution;
  // populated when capture_basis was set
  DenseMatrix basis;       // V_{k+1}, n x (iterations+1)
  DenseMatrix hessenberg;  // H-bar, (iterations+1) x iterations
};

/// Arnoldi with modified Gram-Schmidt plus one unconditional
/// reorthogonalization pass; least squares by progressive Givens rotations;
/// residual norms read off the rotated right-hand side.
GmresTrace run(const DenseMatrix& a, const Vector& b, const GmresOptions& opts = {});

/// Independent optimality oracle: min over polynomials p of degree <= k with
/// p(0) = 1 of ||p(A) b||_2 / ||b||_2, from a dense least-squares problem on
/// the column-scaled Krylov matrix [Ab, A^2 b, ..., A^k b].
double polynomial_oracle(const DenseMatrix& a, const Vector& b, std::size_t k);

/// Runs `trials` GMRES instances with standard-normal right-hand sides drawn
/// from per-trial seeds derived from `seed`.  Deterministic.
std::vector<GmresTrace> trial_ensemble(const DenseMatrix& a, std::size_t trials,
                                       std::uint64_t seed, std::size_t max_iter);

}  // namespace lyap

#endif  // LYAP_GMRES_HPP
