// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"
#include "lyap/gallery.hpp"
#include "test_support.hpp"

using namespace lyap;

TEST_CASE("jordan_matrix: explicit small cases") {
  const DenseMatrix a = jordan_matrix(3, 0.5);
  CHECK(a(0, 0) == Complex(1.0, 0.0));
  CHECK(a(0, 1) == Complex(0.5, 0.0));
  CHECK(a(1, 2) == Complex(0.5, 0.0));
  CHECK(a(0, 2) == Complex(0.0, 0.0));
  CHECK(a(1, 0) == Complex(0.0, 0.0));

  const DenseMatrix one = jordan_matrix(1, 7.0);
  CHECK(one.rows() == 1);
  CHECK(one(0, 0) == Complex(1.0, 0.0));

  CHECK_THROWS_AS(jordan_matrix(0, 1.0), DimensionError);
}

TEST_CASE("jordan_matrix: mu(A) from the closed-form tridiagonal eigenvalues") {
  // Hermitian part is tridiag(alpha/2, 1, alpha/2) with smallest eigenvalue
  // 1 - alpha cos(pi/(n+1)).
  const std::size_t n = 100;
  const double alpha = 1.1;
  const DenseMatrix a = jordan_matrix(n, alpha);
  const double mu_direct = hermitian_eigenvalues(a.hermitian_part()).front();
  const double mu_formula = 1.0 - alpha * std::cos(M_PI / static_cast<double>(n + 1));
  CHECK(mu_direct == doctest::Approx(mu_formula).epsilon(1e-10));
  CHECK(mu_direct < 0.0);  // origin inside W(A)
}

TEST_CASE("integration_matrix: explicit small cases") {
  const DenseMatrix a = integration_matrix(3, 2.0);
  CHECK(a(0, 1) == Complex(2.0, 0.0));
  CHECK(a(1, 2) == Complex(1.0, 0.0));
  const DenseMatrix b = integration_matrix(2, 2.0);
  CHECK(b(0, 0) == Complex(1.0, 0.0));
  CHECK(b(0, 1) == Complex(2.0, 0.0));
  CHECK(b(1, 0) == Complex(0.0, 0.0));
  CHECK(b(1, 1) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(integration_matrix(0, 2.0), DimensionError);
}

TEST_CASE("jordan and integration agree for n=2 with alpha=gamma") {
  const DenseMatrix j = jordan_matrix(2, 0.8);
  const DenseMatrix i = integration_matrix(2, 0.8);
  CHECK((j - i).frobenius_norm() == 0.0);
}

TEST_CASE("damped_string: explicit Lyapunov solution at N=4") {
  const GalleryProblem prob = damped_string(4);
  REQUIRE(prob.g_explicit.has_value());
  REQUIRE(prob.c_explicit.has_value());
  CHECK(prob.half_plane == HalfPlane::Left);
  CHECK(prob.a.rows() == 8);
  // A^*G + GA = -C for the stored (left-half-plane) A
  const DenseMatrix resid =
      prob.a.adjoint() * *prob.g_explicit + *prob.g_explicit * prob.a + *prob.c_explicit;
  CHECK(spectral_norm(resid) <= 1e-10 * spectral_norm(*prob.c_explicit));
  CHECK(prob.lyapunov_residual() <= 1e-10);
}

TEST_CASE("damped_string: G is Hermitian positive definite") {
  const GalleryProblem prob = damped_string(12);
  const std::vector<double> w = hermitian_eigenvalues(*prob.g_explicit);
  CHECK(w.front() > 0.0);
}

TEST_CASE("damped_string: -a is a numerically double eigenvalue") {
  const GalleryProblem prob = damped_string(10);
  const double a_opt = prob.parameters.at("a");
  std::vector<double> dist;
  for (const Complex& lam : eigenvalues(prob.a)) {
    dist.push_back(std::abs(lam + a_opt));
  }
  std::sort(dist.begin(), dist.end());
  CHECK(dist[0] <= 1e-5);
  CHECK(dist[1] <= 1e-5);
}

TEST_CASE("damped_string: K D^-1 M is Hermitian (the solvability condition)") {
  const GalleryProblem prob = damped_string(8);
  const std::size_t n = 8;
  const double h = prob.parameters.at("h");
  const double a_opt = prob.parameters.at("a");
  DenseMatrix m(n, n);
  DenseMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2.0 * h / 3.0;
    k(i, i) = 2.0 / h;
    if (i + 1 < n) {
      m(i, i + 1) = m(i + 1, i) = h / 6.0;
      k(i, i + 1) = k(i + 1, i) = -1.0 / h;
    }
  }
  // D = 2aM; apply D^{ -1} through the Cholesky factor of D.
  const DenseMatrix r_d = cholesky(2.0 * a_opt * m);
  DenseMatrix dinv_m = solve_triangular(r_d, m, Uplo::Upper, Side::Left,
                                        Transpose::ConjTranspose);
  dinv_m = solve_triangular(r_d, dinv_m, Uplo::Upper, Side::Left, Transpose::None);
  const DenseMatrix kdm = k * dinv_m;
  const DenseMatrix asym = kdm - kdm.adjoint();
  CHECK(spectral_norm(asym) <= 1e-12 * spectral_norm(kdm));
}

TEST_CASE("damped_string: rejects N < 2") {
  CHECK_THROWS_AS(damped_string(1), DimensionError);
}

TEST_CASE("kkt_matrix: structure and spectral properties (eta > 2||B||)") {
  const GalleryProblem prob = kkt_matrix(6, 12, std::nullopt, 7);
  const double eta = prob.parameters.at("eta");
  const double bnorm = prob.parameters.at("norm_b");
  CHECK(eta == doctest::Approx(2.0 * bnorm + 0.1));
  CHECK(prob.a.rows() == 18);

  // Lyapunov residual invariant with the explicit (G, C)
  CHECK(prob.lyapunov_residual() <= 1e-10);

  // G positive definite, A self-adjoint in G
  const DenseMatrix& g = *prob.g_explicit;
  CHECK(hermitian_eigenvalues(g).front() > 0.0);
  const DenseMatrix comm = prob.a.adjoint() * g - g * prob.a;
  CHECK(spectral_norm(comm) <= 1e-10 * spectral_norm(g) * spectral_norm(prob.a));

  // real spectrum; eta an eigenvalue of multiplicity >= N - M
  std::size_t near_eta = 0;
  for (const Complex& lam : eigenvalues(prob.a)) {
    CHECK(std::abs(lam.imag()) <= 1e-8 * eta);
    if (std::abs(lam - eta) <= 1e-8 * eta) {
      ++near_eta;
    }
  }
  CHECK(near_eta >= 6);  // N - M = 6
}

TEST_CASE("kkt_matrix: eta below 2||B|| makes G indefinite") {
  const GalleryProblem prob = kkt_matrix(5, 10, std::nullopt, 11);
  const double bnorm = prob.parameters.at("norm_b");
  const GalleryProblem bad = kkt_matrix(5, 10, 1.0 * bnorm, 11);
  CHECK_THROWS_AS(cholesky(*bad.g_explicit), NotPositiveDefiniteError);
}

TEST_CASE("kkt_matrix: rejects M > N") {
  CHECK_THROWS_AS(kkt_matrix(8, 4, std::nullopt, 1), DimensionError);
}

TEST_CASE("kkt_matrix: deterministic for a fixed seed") {
  const GalleryProblem p1 = kkt_matrix(4, 8, std::nullopt, 3);
  const GalleryProblem p2 = kkt_matrix(4, 8, std::nullopt, 3);
  CHECK((p1.a - p2.a).frobenius_norm() == 0.0);
}
