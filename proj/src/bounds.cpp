// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/bounds.hpp"

#include <cmath>
#include <limits>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"
#include "lyap/lyapunov.hpp"

namespace lyap {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> power_curve(double constant, double rate, std::size_t k_max) {
  std::vector<double> values(k_max + 1);
  double v = constant;
  for (std::size_t k = 0; k <= k_max; ++k) {
    values[k] = v;
    v *= rate;
  }
  return values;
}

void check_disk_inputs(double mu_g, double norm_g, double kappa2) {
  if (!(mu_g > 0.0)) {
    throw Error("bound not applicable: numerical range contains the origin (mu <= 0)");
  }
  if (mu_g > norm_g * (1.0 + 1e-12)) {
    throw Error("bound inputs inconsistent: mu exceeds the norm");
  }
  if (kappa2 < 1.0 - 1e-12) {
    throw Error("bound inputs inconsistent: kappa2 below 1");
  }
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Elman:
      return "elman";
    case BoundKind::Beckermann:
      return "beckermann";
    case BoundKind::CpCircle:
      return "cp_circle";
    case BoundKind::Diagonalization:
      return "diagonalization";
  }
  return "unknown";
}

BoundCurve elman(double mu_g, double norm_g, double kappa2, std::size_t k_max) {
  check_disk_inputs(mu_g, norm_g, kappa2);
  const double ratio = std::min(mu_g / norm_g, 1.0);
  BoundCurve curve;
  curve.kind = BoundKind::Elman;
  curve.rate = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  curve.constant = std::sqrt(kappa2);
  curve.values = power_curve(curve.constant, curve.rate, k_max);
  curve.mu_g = mu_g;
  curve.norm_g = norm_g;
  curve.kappa2 = kappa2;
  return curve;
}

BoundCurve beckermann(double mu_g, double norm_g, double kappa2, std::size_t k_max) {
  check_disk_inputs(mu_g, norm_g, kappa2);
  const double beta = std::acos(std::min(mu_g / norm_g, 1.0));
  BoundCurve curve;
  curve.kind = BoundKind::Beckermann;
  curve.rate = 2.0 * std::sin(beta * kPi / (4.0 * kPi - 2.0 * beta));
  curve.constant = std::sqrt(kappa2) * (2.0 + curve.rate);
  curve.values = power_curve(curve.constant, curve.rate, k_max);
  curve.mu_g = mu_g;
  curve.norm_g = norm_g;
  curve.kappa2 = kappa2;
  return curve;
}

CircleRate circle_rate(const FovBoundary& fb) {
  if (!(fb.mu > 0.0)) {
    throw Error("circle_rate: numerical range not in the open right half-plane");
  }
  double re_min = std::numeric_limits<double>::infinity();
  double re_max = -std::numeric_limits<double>::infinity();
  for (const Complex& z : fb.points) {
    re_min = std::min(re_min, z.real());
    re_max = std::max(re_max, z.real());
  }
  const double c = 0.5 * (re_min + re_max);
  double rho = 0.0;
  for (const Complex& z : fb.points) {
    rho = std::max(rho, std::abs(1.0 - z / c));
  }
  return CircleRate{c, rho};
}

BoundCurve cp_circle(const FovBoundary& fb, double kappa2, std::size_t k_max) {
  const CircleRate cr = circle_rate(fb);
  BoundCurve curve;
  curve.kind = BoundKind::CpCircle;
  curve.rate = cr.rate;
  curve.constant = std::sqrt(kappa2) * (1.0 + std::sqrt(2.0));
  curve.values = power_curve(curve.constant, curve.rate, k_max);
  curve.kappa2 = kappa2;
  curve.rho_g = cr.rate;
  curve.mu_g = fb.mu;
  return curve;
}

DenseMatrix diagonalization_rhs(const DenseMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("diagonalization_rhs: matrix not square");
  }
  const std::size_t n = a.rows();
  const SchurDecomposition dec = schur(a);
  const double tnorm = std::max(dec.t.frobenius_norm(), 1e-300);

  // Eigenvectors of the triangular factor by back substitution; the matrix
  // of eigenvectors in the Schur basis is upper triangular with unit
  // columns.  Near-defective eigenvalues give tiny denominators, which are
  // floored so the condition-number check below can catch them.
  DenseMatrix vt(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex lam = dec.t(j, j);
    if (!(lam.real() > 0.0)) {
      throw SpectrumError("diagonalization_rhs: eigenvalue not in the open right half-plane",
                          lam);
    }
    Vector y(j + 1, Complex(0.0, 0.0));
    y[j] = Complex(1.0, 0.0);
    for (std::size_t ii = j; ii-- > 0;) {
      Complex acc = -dec.t(ii, j);
      for (std::size_t k = ii + 1; k < j; ++k) {
        acc -= dec.t(ii, k) * y[k];
      }
      Complex den = dec.t(ii, ii) - lam;
      if (std::abs(den) < 1e-300 + std::numeric_limits<double>::epsilon() * tnorm) {
        den = Complex(std::numeric_limits<double>::epsilon() * tnorm, 0.0);
      }
      y[ii] = acc / den;
    }
    double nrm = 0.0;
    for (const Complex& yi : y) {
      nrm += std::norm(yi);
    }
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i <= j; ++i) {
      vt(i, j) = y[i] / nrm;
    }
  }

  // kappa2(V) from the singular values of V = Q V_T (same as of V_T).
  const std::vector<double> sv = hermitian_eigenvalues(vt.adjoint() * vt);
  if (!(sv.front() > 0.0) || std::sqrt(sv.back() / sv.front()) >= 1e14) {
    throw Error("diagonalization_rhs: matrix is defective to working precision");
  }

  // C = V^{-*} (Lambda^* + Lambda) V^{-1} = Q V_T^{-*} D V_T^{-1} Q^*.
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = 2.0 * dec.t(i, i).real();
  }
  const DenseMatrix vt_inv = solve_triangular(vt, DenseMatrix::identity(n), Uplo::Upper,
                                              Side::Left, Transpose::None);
  const DenseMatrix inner = vt_inv.adjoint() * DenseMatrix::diagonal(d) * vt_inv;
  return (dec.q * inner * dec.q.adjoint()).hermitian_part();
}

double diagonalization_constant(const DenseMatrix& a) {
  const DenseMatrix c = diagonalization_rhs(a);
  const LyapunovSolution sol = solve(a, c);
  const std::vector<double> w = hermitian_eigenvalues(sol.g);
  return std::sqrt(w.back() / w.front());
}

ValidationReport validate(const GmresTrace& trace, const BoundCurve& curve) {
  ValidationReport report;
  const std::size_t len = std::min(trace.rel_residuals.size(), curve.values.size());
  for (std::size_t k = 0; k < len; ++k) {
    double ratio;
    if (curve.values[k] > 0.0) {
      ratio = trace.rel_residuals[k] / curve.values[k];
    } else {
      ratio = trace.rel_residuals[k] <= 1e-300
                  ? 0.0
                  : std::numeric_limits<double>::infinity();
    }
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax_k = k;
    }
  }
  report.violated = report.max_ratio > 1.0 + 1e-8;
  return report;
}

}  // namespace lyap
