// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_BOUNDS_HPP
#define LYAP_BOUNDS_HPP

#include <string>
#include <vector>

#include "lyap/fov.hpp"
#include "lyap/gmres.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

enum class BoundKind { Elman, Beckermann, CpCircle, Diagonalization };

std::string to_string(BoundKind kind);

/// A per-iteration residual bound constant * rate^k.  The stored values are
/// untruncated even where they exceed 1 (truncation at 1 is a display
/// decision, not part of the bound).
struct BoundCurve {
  BoundKind kind;
  double constant = 1.0;
  double rate = 0.0;
  std::vector<double> values;  // values[k] = constant * rate^k, k = 0..k_max
  // inputs, as applicable
  double mu_g = 0.0;
  double norm_g = 0.0;
  double kappa2 = 1.0;
  double rho_g = 0.0;
};

/// rate = sqrt(1 - mu^2 / norm^2), constant = sqrt(kappa2).
/// Requires 0 < mu_g <= norm_g; mu_g <= 0 means the numerical range touches
/// the origin and the bound does not apply.
BoundCurve elman(double mu_g, double norm_g, double kappa2, std::size_t k_max);

/// rate = 2 sin(beta pi / (4 pi - 2 beta)) with cos(beta) = mu/norm;
/// constant = sqrt(kappa2) * (2 + rate).
BoundCurve beckermann(double mu_g, double norm_g, double kappa2, std::size_t k_max);

/// Circle enclosure of a numerical range in the open right half-plane:
/// center c is the midpoint of the real extent of the boundary points, and
/// the rate is max |1 - z/c| over the boundary points.
struct CircleRate {
  double center;
  double rate;
};
CircleRate circle_rate(const FovBoundary& fb);

/// rate = circle_rate(fb).rate, constant = sqrt(kappa2) * (1 + sqrt(2)).
BoundCurve cp_circle(const FovBoundary& fb, double kappa2, std::size_t k_max);

/// The eigenvector-based Lyapunov right-hand side
/// C = V^{-*} (Lambda^* + Lambda) V^{-1}, built from the Schur form with
/// unit eigenvector columns.  Errors if A is defective to working precision
/// (eigenvector matrix condition >= 1e14) or has an eigenvalue outside the
/// open right half-plane.
DenseMatrix diagonalization_rhs(const DenseMatrix& a);

/// sqrt(kappa2(G)) for the diagonalization_rhs choice of C; equals
/// kappa2(V).
double diagonalization_constant(const DenseMatrix& a);

/// Checks a GMRES trace against a bound curve.
struct ValidationReport {
  double max_ratio = 0.0;
  std::size_t argmax_k = 0;
  bool violated = false;  // max_ratio > 1 + 1e-8
};
ValidationReport validate(const GmresTrace& trace, const BoundCurve& curve);

}  // namespace lyap

#endif  // LYAP_BOUNDS_HPP
