// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"
#include "lyap/gallery.hpp"
#include "lyap/matrix.hpp"
#include "test_support.hpp"

using namespace lyap;
using test::random_complex;
using test::random_hermitian;
using test::random_spd;
using test::rel_error;

TEST_CASE("dense matrix basics") {
  DenseMatrix a = DenseMatrix::from_rows({{1.0, 2.0}, {3.0, Complex(0.0, 1.0)}});
  CHECK(a(0, 1) == Complex(2.0, 0.0));
  CHECK(a.adjoint()(1, 0) == Complex(2.0, 0.0));
  CHECK(a.adjoint()(1, 1) == Complex(0.0, -1.0));
  CHECK_THROWS_AS(DenseMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  std::vector<Complex> bad(4, Complex(1.0, 0.0));
  bad[2] = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(DenseMatrix(2, 2, bad), Error);
  CHECK_THROWS_AS(a * DenseMatrix(3, 3), DimensionError);
}

TEST_CASE("hermitian_eigen: diagonal and symmetric 2x2") {
  auto eig = hermitian_eigen(DenseMatrix::from_rows({{2.0, 0.0}, {0.0, 1.0}}));
  CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(2.0).epsilon(1e-14));

  auto eig2 = hermitian_eigen(DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(eig2.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig2.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigen: random 8x8 reconstruction") {
  const DenseMatrix h = random_hermitian(8, 42);
  const HermitianEigen eig = hermitian_eigen(h);
  REQUIRE(std::is_sorted(eig.values.begin(), eig.values.end()));
  const DenseMatrix rec =
      eig.vectors * DenseMatrix::diagonal(eig.values) * eig.vectors.adjoint();
  CHECK((rec - h).frobenius_norm() <= 1e-12 * h.frobenius_norm());
  const DenseMatrix unit = eig.vectors.adjoint() * eig.vectors - DenseMatrix::identity(8);
  CHECK(unit.frobenius_norm() <= 1e-11);
  // per-column residual ||H v_j - lambda_j v_j||
  for (std::size_t j = 0; j < 8; ++j) {
    Vector v = eig.vectors.col(j);
    Vector hv = matvec(h, v);
    axpy(Complex(-eig.values[j], 0.0), v, hv);
    CHECK(norm2(hv) <= 1e-11 * spectral_norm(h));
  }
}

TEST_CASE("hermitian_eigen: input validation") {
  CHECK_THROWS_AS(hermitian_eigen(DenseMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(hermitian_eigen(random_complex(5, 5, 3)), Error);
}

TEST_CASE("hermitian_eigen: Rayleigh quotients stay inside the spectrum") {
  const DenseMatrix h = random_hermitian(12, 77);
  const HermitianEigen eig = hermitian_eigen(h);
  SplitMix64 rng(123);
  for (int trial = 0; trial < 1000; ++trial) {
    Vector v(12);
    for (auto& vi : v) {
      vi = Complex(rng.normal(), rng.normal());
    }
    const double q = dot(v, matvec(h, v)).real() / dot(v, v).real();
    CHECK(q >= eig.values.front() - 1e-10);
    CHECK(q <= eig.values.back() + 1e-10);
  }
}

TEST_CASE("hermitian_extreme agrees with the full decomposition") {
  const DenseMatrix h = random_hermitian(25, 9);
  const HermitianEigen full = hermitian_eigen(h);
  const ExtremeEigenPair hi = hermitian_extreme(h, true);
  const ExtremeEigenPair lo = hermitian_extreme(h, false);
  CHECK(hi.value == doctest::Approx(full.values.back()).epsilon(1e-12));
  CHECK(lo.value == doctest::Approx(full.values.front()).epsilon(1e-12));
  Vector r = matvec(h, hi.vector);
  axpy(Complex(-hi.value, 0.0), hi.vector, r);
  CHECK(norm2(r) <= 1e-9 * spectral_norm(h));
}

TEST_CASE("schur: identity and triangular input") {
  const SchurDecomposition id = schur(DenseMatrix::identity(4));
  CHECK((id.t - DenseMatrix::identity(4)).frobenius_norm() <= 1e-14);
  CHECK((id.q.adjoint() * id.q - DenseMatrix::identity(4)).frobenius_norm() <= 1e-14);

  // already triangular: diagonal multiset preserved
  DenseMatrix tri(4, 4);
  const double diag[4] = {3.0, -1.0, 2.0, 0.5};
  for (std::size_t i = 0; i < 4; ++i) {
    tri(i, i) = diag[i];
    for (std::size_t j = i + 1; j < 4; ++j) {
      tri(i, j) = 1.0;
    }
  }
  std::vector<double> got;
  for (const Complex& z : schur(tri).eigenvalues()) {
    got.push_back(z.real());
  }
  std::sort(got.begin(), got.end());
  CHECK(got[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(got[3] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("schur: random 10x10 reconstruction") {
  const DenseMatrix a = random_complex(10, 10, 7);
  const SchurDecomposition dec = schur(a);
  for (std::size_t j = 0; j < 10; ++j) {
    for (std::size_t i = j + 1; i < 10; ++i) {
      CHECK(dec.t(i, j) == Complex(0.0, 0.0));
    }
  }
  CHECK((dec.q * dec.t * dec.q.adjoint() - a).frobenius_norm() <=
        1e-11 * a.frobenius_norm());
  CHECK((dec.q.adjoint() * dec.q - DenseMatrix::identity(10)).frobenius_norm() <= 1e-11);
}

TEST_CASE("schur of a Hermitian matrix matches hermitian_eigen") {
  const DenseMatrix h = random_hermitian(14, 5);
  std::vector<double> from_schur;
  for (const Complex& z : schur(h).eigenvalues()) {
    from_schur.push_back(z.real());
  }
  std::sort(from_schur.begin(), from_schur.end());
  const std::vector<double> direct = hermitian_eigenvalues(h);
  const double scale = spectral_norm(h);
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(std::abs(from_schur[i] - direct[i]) <= 1e-9 * scale);
  }
}

TEST_CASE("spectral_norm: trivial cases and Gram oracle") {
  CHECK(spectral_norm(DenseMatrix::from_rows({{3.0, 0.0}, {0.0, -1.0}})) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(spectral_norm(DenseMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}})) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_norm(DenseMatrix(3, 3)) == 0.0);

  const DenseMatrix x = random_complex(7, 5, 3);
  const std::vector<double> w = hermitian_eigenvalues(x.adjoint() * x);
  CHECK(spectral_norm(x) == doctest::Approx(std::sqrt(w.back())).epsilon(1e-10));
}

TEST_CASE("spectral_norm: unitary invariance") {
  const DenseMatrix x = random_complex(9, 9, 31);
  const DenseMatrix q = schur(random_complex(9, 9, 32)).q;  // unitary
  CHECK(spectral_norm(q * x) == doctest::Approx(spectral_norm(x)).epsilon(1e-10));
}

TEST_CASE("cholesky: identity, diagonal, random SPD, failure") {
  CHECK((cholesky(DenseMatrix::identity(3)) - DenseMatrix::identity(3)).frobenius_norm() ==
        0.0);
  const DenseMatrix d = cholesky(DenseMatrix::from_rows({{4.0, 0.0}, {0.0, 9.0}}));
  CHECK(d(0, 0) == Complex(2.0, 0.0));
  CHECK(d(1, 1) == Complex(3.0, 0.0));

  const DenseMatrix g = random_spd(9, 5);
  const DenseMatrix r = cholesky(g);
  CHECK((r.adjoint() * r - g).frobenius_norm() <= 1e-12 * g.frobenius_norm());
  for (std::size_t j = 0; j < 9; ++j) {
    for (std::size_t i = j + 1; i < 9; ++i) {
      CHECK(r(i, j) == Complex(0.0, 0.0));
    }
  }

  try {
    cholesky(DenseMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}}));
    FAIL("expected NotPositiveDefiniteError");
  } catch (const NotPositiveDefiniteError& e) {
    CHECK(e.index == 1);
    CHECK(e.pivot == doctest::Approx(-3.0));
  }
}

TEST_CASE("principal_sqrt: identity, diagonal, integration matrix") {
  CHECK((principal_sqrt(DenseMatrix::identity(4)) - DenseMatrix::identity(4))
            .frobenius_norm() <= 1e-14);
  const DenseMatrix s = principal_sqrt(DenseMatrix::from_rows({{4.0, 0.0}, {0.0, 9.0}}));
  CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-13));

  const DenseMatrix a = integration_matrix(10, 2.0);
  const DenseMatrix sq = principal_sqrt(a);
  CHECK(spectral_norm(sq * sq - a) <= 1e-11 * spectral_norm(a));
  // spectrum of the root is in the open right half-plane
  for (const Complex& z : eigenvalues(sq)) {
    CHECK(z.real() > 0.0);
  }
}

TEST_CASE("principal_sqrt: forbidden ray") {
  CHECK_THROWS_AS(principal_sqrt(DenseMatrix::from_rows({{-1.0, 0.0}, {0.0, 2.0}})),
                  SpectrumError);
  CHECK_THROWS_AS(principal_sqrt(DenseMatrix(2, 2)), SpectrumError);  // zero matrix
}

TEST_CASE("solve_triangular: identity, scalar, residuals, errors") {
  const DenseMatrix b = random_complex(4, 2, 11);
  const DenseMatrix x =
      solve_triangular(DenseMatrix::identity(4), b, Uplo::Upper, Side::Left, Transpose::None);
  CHECK((x - b).frobenius_norm() == 0.0);

  const DenseMatrix s = solve_triangular(DenseMatrix::from_rows({{2.0}}),
                                         DenseMatrix::from_rows({{4.0}}), Uplo::Upper,
                                         Side::Left, Transpose::None);
  CHECK(s(0, 0) == Complex(2.0, 0.0));

  DenseMatrix u = random_complex(8, 8, 13);
  for (std::size_t j = 0; j < 8; ++j) {
    u(j, j) += 4.0;
    for (std::size_t i = j + 1; i < 8; ++i) {
      u(i, j) = Complex(0.0, 0.0);
    }
  }
  const DenseMatrix rhs = random_complex(8, 8, 17);
  const DenseMatrix sol = solve_triangular(u, rhs, Uplo::Upper, Side::Left, Transpose::None);
  CHECK(spectral_norm(u * sol - rhs) <= 1e-12 * spectral_norm(u) * spectral_norm(sol));

  DenseMatrix sing = DenseMatrix::identity(3);
  sing(1, 1) = Complex(0.0, 0.0);
  CHECK_THROWS_AS(
      solve_triangular(sing, rhs, Uplo::Upper, Side::Left, Transpose::None),
      Error);
}

TEST_CASE("solve_triangular: all side/transpose combinations") {
  DenseMatrix u = random_complex(6, 6, 19);
  for (std::size_t j = 0; j < 6; ++j) {
    u(j, j) += 3.0;
    for (std::size_t i = j + 1; i < 6; ++i) {
      u(i, j) = Complex(0.0, 0.0);
    }
  }
  const DenseMatrix b_left = random_complex(6, 3, 23);
  const DenseMatrix b_right = random_complex(3, 6, 29);

  const DenseMatrix x1 = solve_triangular(u, b_left, Uplo::Upper, Side::Left, Transpose::None);
  CHECK(rel_error(u * x1, b_left) <= 1e-12);
  const DenseMatrix x2 =
      solve_triangular(u, b_left, Uplo::Upper, Side::Left, Transpose::ConjTranspose);
  CHECK(rel_error(u.adjoint() * x2, b_left) <= 1e-12);
  const DenseMatrix x3 = solve_triangular(u, b_right, Uplo::Upper, Side::Right, Transpose::None);
  CHECK(rel_error(x3 * u, b_right) <= 1e-12);
  const DenseMatrix x4 =
      solve_triangular(u, b_right, Uplo::Upper, Side::Right, Transpose::ConjTranspose);
  CHECK(rel_error(x4 * u.adjoint(), b_right) <= 1e-12);

  const DenseMatrix l = u.adjoint();
  const DenseMatrix x5 = solve_triangular(l, b_left, Uplo::Lower, Side::Left, Transpose::None);
  CHECK(rel_error(l * x5, b_left) <= 1e-12);
}

TEST_CASE("principal_sqrt reconstruction across the gallery (n <= 100)") {
  const DenseMatrix cases[] = {integration_matrix(100, 2.0), jordan_matrix(100, 1.1),
                               integration_matrix(33, 0.7)};
  for (const DenseMatrix& a : cases) {
    const DenseMatrix s = principal_sqrt(a);
    CHECK(spectral_norm(s * s - a) <= 1e-10 * spectral_norm(a));
  }
}
