// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/gallery.hpp"

#include <cmath>
#include <string>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"
#include "lyap/rng.hpp"

namespace lyap {

DenseMatrix GalleryProblem::analysis_matrix() const {
  return half_plane == HalfPlane::Left ? -a : a;
}

double GalleryProblem::lyapunov_residual() const {
  if (!g_explicit || !c_explicit) {
    throw Error("lyapunov_residual: problem has no explicit (G, C)");
  }
  const DenseMatrix a_eff = analysis_matrix();
  const DenseMatrix& g = *g_explicit;
  const DenseMatrix& c = *c_explicit;
  const DenseMatrix resid = a_eff.adjoint() * g + g * a_eff - c;
  return spectral_norm(resid) / spectral_norm(c);
}

DenseMatrix jordan_matrix(std::size_t n, double alpha) {
  if (n == 0) {
    throw DimensionError("jordan_matrix: n must be >= 1");
  }
  DenseMatrix a = DenseMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    a(j - 1, j) = alpha;
  }
  return a;
}

DenseMatrix integration_matrix(std::size_t n, double gamma) {
  if (n == 0) {
    throw DimensionError("integration_matrix: n must be >= 1");
  }
  DenseMatrix a = DenseMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    a(j - 1, j) = gamma / static_cast<double>(j);
  }
  return a;
}

namespace {

DenseMatrix real_tridiag(std::size_t n, double off, double diag) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag;
    if (i + 1 < n) {
      m(i, i + 1) = off;
      m(i + 1, i) = off;
    }
  }
  return m;
}

}  // namespace

GalleryProblem damped_string(std::size_t big_n) {
  if (big_n < 2) {
    throw DimensionError("damped_string: N must be >= 2");
  }
  const std::size_t nn = big_n;
  const double h = 1.0 / static_cast<double>(nn + 1);
  const DenseMatrix m = real_tridiag(nn, h / 6.0, 2.0 * h / 3.0);
  const DenseMatrix k = real_tridiag(nn, -1.0 / h, 2.0 / h);

  // a = sqrt(lambda_min(M^-1 K)) via the symmetric form L^-1 K L^-*,
  // L the Cholesky factor of M (avoids a nonsymmetric eigensolve).
  const DenseMatrix r_m = cholesky(m);  // M = R^* R
  // L = R^*; L^-1 K L^-* = R^-* K R^-1.
  DenseMatrix sym = solve_triangular(r_m, k, Uplo::Upper, Side::Left,
                                     Transpose::ConjTranspose);
  sym = solve_triangular(r_m, sym, Uplo::Upper, Side::Right, Transpose::None);
  const std::vector<double> lam = hermitian_eigenvalues(sym.hermitian_part());
  const double a_opt = std::sqrt(lam.front());

  // M^-1 K through the same factorization.
  DenseMatrix mik = solve_triangular(r_m, k, Uplo::Upper, Side::Left,
                                     Transpose::ConjTranspose);
  mik = solve_triangular(r_m, mik, Uplo::Upper, Side::Left, Transpose::None);

  const std::size_t n2 = 2 * nn;
  DenseMatrix a(n2, n2);
  for (std::size_t i = 0; i < nn; ++i) {
    a(i, nn + i) = 1.0;
    a(nn + i, nn + i) = -2.0 * a_opt;
    for (std::size_t j = 0; j < nn; ++j) {
      a(nn + i, j) = -mik(i, j);
    }
  }

  // With D = 2aM the explicit solution collapses to
  //   G = [[aM + K/(2a), M/2], [M/2, M/(2a)]].
  DenseMatrix g(n2, n2);
  DenseMatrix c(n2, n2);
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      g(i, j) = a_opt * m(i, j) + k(i, j) / (2.0 * a_opt);
      g(i, nn + j) = 0.5 * m(i, j);
      g(nn + i, j) = 0.5 * m(i, j);
      g(nn + i, nn + j) = m(i, j) / (2.0 * a_opt);
      c(i, j) = k(i, j);
      c(nn + i, nn + j) = m(i, j);
    }
  }

  GalleryProblem prob;
  prob.a = std::move(a);
  prob.g_explicit = std::move(g);
  prob.c_explicit = std::move(c);
  prob.half_plane = HalfPlane::Left;
  prob.label = "string:N=" + std::to_string(nn);
  prob.parameters["N"] = static_cast<double>(nn);
  prob.parameters["h"] = h;
  prob.parameters["a"] = a_opt;
  return prob;
}

GalleryProblem kkt_matrix(std::size_t m, std::size_t n, std::optional<double> eta,
                          std::uint64_t seed) {
  if (m > n) {
    throw DimensionError("kkt_matrix: requires M <= N");
  }
  // Standard-normal B, filled row by row from the SplitMix64 stream; the
  // rank check retries with the next seed on (improbable) deficiency.
  DenseMatrix b(m, n);
  std::uint64_t use_seed = seed;
  for (int attempt = 0; attempt < 16; ++attempt) {
    SplitMix64 rng(use_seed);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        b(i, j) = rng.normal();
      }
    }
    const std::vector<double> w = hermitian_eigenvalues(b * b.adjoint());
    if (w.front() > 1e-24 * w.back()) {
      break;
    }
    ++use_seed;
  }
  const double bnorm = spectral_norm(b);
  const double eta_val = eta.value_or(2.0 * bnorm + 0.1);
  if (!(eta_val > 0.0)) {
    throw Error("kkt_matrix: eta must be positive");
  }

  const std::size_t dim = n + m;
  DenseMatrix a(dim, dim);
  DenseMatrix g = DenseMatrix::identity(dim);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = eta_val;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(j, n + i) = std::conj(b(i, j));  // B^* block
      a(n + i, j) = -b(i, j);            // -B block
      g(j, n + i) = (2.0 / eta_val) * std::conj(b(i, j));
      g(n + i, j) = (2.0 / eta_val) * b(i, j);
    }
  }
  DenseMatrix c = a.adjoint() * g + g * a;
  c = c.hermitian_part();

  GalleryProblem prob;
  prob.a = std::move(a);
  prob.g_explicit = std::move(g);
  prob.c_explicit = std::move(c);
  prob.half_plane = HalfPlane::Right;
  prob.label = "kkt:M=" + std::to_string(m) + ",N=" + std::to_string(n);
  prob.parameters["M"] = static_cast<double>(m);
  prob.parameters["N"] = static_cast<double>(n);
  prob.parameters["eta"] = eta_val;
  prob.parameters["norm_b"] = bnorm;
  prob.parameters["seed"] = static_cast<double>(use_seed);
  return prob;
}

}  // namespace lyap
