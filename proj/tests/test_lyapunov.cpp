// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"
#include "lyap/gallery.hpp"
#include "lyap/lyapunov.hpp"
#include "test_support.hpp"

using namespace lyap;
using test::random_complex;
using test::random_right_half_plane;
using test::random_spd;
using test::random_vector;

TEST_CASE("solve: scalar case 2 Re(a) g = c") {
  const LyapunovSolution sol = solve(DenseMatrix::from_rows({{1.0}}),
                                     DenseMatrix::from_rows({{2.0}}));
  CHECK(sol.g(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("solve: C = A + A^* gives G = I") {
  const DenseMatrix a = random_right_half_plane(12, 4);
  const DenseMatrix c = a + a.adjoint();
  const LyapunovSolution sol = solve(a, c);
  CHECK((sol.g - DenseMatrix::identity(12)).frobenius_norm() <= 1e-10 * std::sqrt(12.0));
  CHECK(sol.residual <= 1e-10);
}

TEST_CASE("solve: spectral precondition is enforced") {
  DenseMatrix a = DenseMatrix::from_rows({{-1.0, 0.0}, {0.0, 2.0}});
  try {
    solve(a, DenseMatrix::identity(2));
    FAIL("expected SpectrumError");
  } catch (const SpectrumError& e) {
    CHECK(e.eigenvalue.real() == doctest::Approx(-1.0));
  }
}

TEST_CASE("solve: forward and backward sweeps agree") {
  const DenseMatrix a = random_right_half_plane(20, 8);
  const DenseMatrix c = random_spd(20, 9);
  const LyapunovSolution fwd = solve(a, c, SweepOrder::Forward);
  const LyapunovSolution bwd = solve(a, c, SweepOrder::Backward);
  CHECK((fwd.g - bwd.g).frobenius_norm() <= 1e-10 * fwd.g.frobenius_norm());
  CHECK(fwd.residual <= 1e-10);
  CHECK(bwd.residual <= 1e-10);
}

TEST_CASE("solve round trip against the operator (n <= 50)") {
  for (std::uint64_t seed : {21, 22, 23}) {
    const std::size_t n = 10 + 13 * (seed - 21);
    const DenseMatrix a = random_right_half_plane(n, seed);
    const DenseMatrix c = random_spd(n, seed + 100);
    const LyapunovSolution sol = solve(a, c);
    const DenseMatrix lg = lyap_operator_apply(a, sol.g);
    CHECK(spectral_norm(lg - c) <= 1e-10 * spectral_norm(c));
  }
}

TEST_CASE("real-part identity: Re<Av,v>_G / <v,v>_G = v*Cv / (2 v*Gv)") {
  const DenseMatrix a = random_right_half_plane(15, 33);
  const DenseMatrix c = random_spd(15, 34);
  const LyapunovSolution sol = solve(a, c);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    Vector v(15);
    for (auto& vi : v) {
      vi = Complex(rng.normal(), rng.normal());
    }
    const Vector av = matvec(a, v);
    const Vector gv = matvec(sol.g, v);
    const Vector cv = matvec(c, v);
    const double lhs = dot(v, matvec(sol.g, av)).real() / dot(v, gv).real();
    const double rhs = 0.5 * dot(v, cv).real() / dot(v, gv).real();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("diagonalization right-hand side recovers G = V^-* V^-1") {
  // A = V Lambda V^-1 with positive spectrum; C = V^-*(Lambda^*+Lambda)V^-1.
  const std::size_t n = 8;
  DenseMatrix v = random_complex(n, n, 51);
  v += 2.0 * DenseMatrix::identity(n);  // keep V well conditioned
  const std::vector<double> lam = {0.5, 0.9, 1.3, 1.8, 2.2, 2.9, 3.3, 4.0};
  const SchurDecomposition vdec = schur(v);
  // V^-1 through the Schur form of V to avoid a general inverse
  const DenseMatrix vinv =
      vdec.q *
      solve_triangular(vdec.t, vdec.q.adjoint(), Uplo::Upper, Side::Left, Transpose::None);
  const DenseMatrix a = v * DenseMatrix::diagonal(lam) * vinv;
  std::vector<double> two_re(n);
  for (std::size_t i = 0; i < n; ++i) {
    two_re[i] = 2.0 * lam[i];
  }
  const DenseMatrix c =
      (vinv.adjoint() * DenseMatrix::diagonal(two_re) * vinv).hermitian_part();
  const LyapunovSolution sol = solve(a, c);
  const DenseMatrix g_expected = (vinv.adjoint() * vinv).hermitian_part();
  CHECK((sol.g - g_expected).frobenius_norm() <= 1e-9 * g_expected.frobenius_norm());
}

TEST_CASE("lyap_operator_apply: linearity and Hermitian substitution") {
  const DenseMatrix a = random_complex(6, 6, 61);
  CHECK(lyap_operator_apply(a, DenseMatrix(6, 6)).frobenius_norm() == 0.0);
  const DenseMatrix h = test::random_hermitian(6, 62);
  const DenseMatrix expect = 2.0 * h;
  CHECK((lyap_operator_apply(h, DenseMatrix::identity(6)) - expect).frobenius_norm() <=
        1e-14 * expect.frobenius_norm());
  CHECK_THROWS_AS(lyap_operator_apply(a, DenseMatrix(5, 5)), DimensionError);
}

TEST_CASE("lyap operator eigenstructure on left-eigenvector outer products") {
  // diagonalizable 6x6; left eigenvectors from the inverse eigenvector matrix
  const std::size_t n = 6;
  DenseMatrix v = random_complex(n, n, 71);
  v += 2.5 * DenseMatrix::identity(n);
  const std::vector<Complex> lam = {Complex(1.0, 0.3),  Complex(1.6, -0.2),
                                    Complex(2.2, 0.0),  Complex(2.9, 0.5),
                                    Complex(3.4, -0.4), Complex(4.1, 0.1)};
  const SchurDecomposition vdec = schur(v);
  const DenseMatrix vinv =
      vdec.q *
      solve_triangular(vdec.t, vdec.q.adjoint(), Uplo::Upper, Side::Left, Transpose::None);
  const DenseMatrix a = v * DenseMatrix::diagonal(lam) * vinv;
  // rows of V^-1 are the left eigenvectors: w_j^* A = lam_j w_j^*
  const DenseMatrix w = vinv.adjoint();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      const DenseMatrix wjl = outer(w.col(j), w.col(l));
      const DenseMatrix lhs = lyap_operator_apply(a, wjl);
      const Complex factor = std::conj(lam[j]) + lam[l];
      const DenseMatrix rhs = factor * wjl;
      CHECK((lhs - rhs).frobenius_norm() <= 1e-10 * rhs.frobenius_norm());
    }
  }
}

TEST_CASE("inverse_iteration: zero steps is a no-op family") {
  const DenseMatrix a = random_right_half_plane(5, 81);
  const IterationFamily family = inverse_iteration(a, DenseMatrix::identity(5), 0, 0.0);
  CHECK(family.members.empty());
}

TEST_CASE("inverse_iteration: members satisfy the recurrence") {
  const DenseMatrix a = random_right_half_plane(12, 82);
  const std::size_t steps = 4;
  const IterationFamily family =
      inverse_iteration(a, DenseMatrix::identity(12), steps, 0.0);
  REQUIRE(family.members.size() == steps);
  DenseMatrix g_prev = DenseMatrix::identity(12);
  for (const auto& member : family.members) {
    CHECK(member.residual <= 1e-10);
    const DenseMatrix lg = lyap_operator_apply(a, member.ip.g());
    CHECK(spectral_norm(lg - g_prev) <= 1e-9 * spectral_norm(g_prev));
    CHECK(member.ip.lambda_min() > 0.0);
    g_prev = member.ip.g();
  }
}

TEST_CASE("inverse_iteration: shifted recurrence and shift validation") {
  const DenseMatrix a = 3.0 * DenseMatrix::identity(6) + random_complex(6, 6, 83);
  // ensure spectrum stays right of 0.5 for the shifted test
  const double shift = 0.5;
  const IterationFamily family =
      inverse_iteration(a, DenseMatrix::identity(6), 2, shift);
  DenseMatrix a_s = a;
  for (std::size_t i = 0; i < 6; ++i) {
    a_s(i, i) -= shift;
  }
  DenseMatrix g_prev = DenseMatrix::identity(6);
  for (const auto& member : family.members) {
    const DenseMatrix lg = lyap_operator_apply(a_s, member.ip.g());
    CHECK(spectral_norm(lg - g_prev) <= 1e-9 * spectral_norm(g_prev));
    g_prev = member.ip.g();
  }
  // a shift beyond the leftmost eigenvalue must be rejected
  CHECK_THROWS_AS(inverse_iteration(DenseMatrix::identity(4), DenseMatrix::identity(4),
                                    1, 2.0),
                  SpectrumError);
}

TEST_CASE("rank-1 attraction toward the leading left eigenvector") {
  // distinct real positive eigenvalues with gap >= 0.5
  const std::size_t n = 5;
  DenseMatrix v = random_complex(n, n, 91);
  v += 2.0 * DenseMatrix::identity(n);
  const std::vector<double> lam = {1.0, 1.7, 2.4, 3.3, 4.1};
  const SchurDecomposition vdec = schur(v);
  const DenseMatrix vinv =
      vdec.q *
      solve_triangular(vdec.t, vdec.q.adjoint(), Uplo::Upper, Side::Left, Transpose::None);
  const DenseMatrix a = v * DenseMatrix::diagonal(lam) * vinv;
  const Vector w1 = vinv.adjoint().col(0);
  DenseMatrix target = outer(w1, w1);
  target *= 1.0 / target.frobenius_norm();

  const IterationFamily family = inverse_iteration(a, DenseMatrix::identity(n), 20, 0.0);
  DenseMatrix g = family.members.back().ip.g();
  g *= 1.0 / g.frobenius_norm();
  // Frobenius alignment |<target, g>_F|
  Complex align(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      align += std::conj(target(i, j)) * g(i, j);
    }
  }
  CHECK(std::abs(align) >= 0.999);
}

TEST_CASE("solve: dimension mismatch") {
  CHECK_THROWS_AS(solve(DenseMatrix::identity(3), DenseMatrix::identity(4)),
                  DimensionError);
}
