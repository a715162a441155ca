// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/lyapunov.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"

namespace lyap {

namespace {

// (J M J)(i,j) = M(n-1-i, n-1-j): reverses rows and columns.
DenseMatrix flip_both(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  DenseMatrix out(n, m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      out(i, j) = m(n - 1 - i, m.cols() - 1 - j);
    }
  }
  return out;
}

// Solves T^* Y + Y T = C for upper-triangular T.
//
// Forward: columns left to right; column j satisfies
//   (T^* + T(j,j) I) y_j = c_j - sum_{k<j} T(k,j) y_k,
// a lower-triangular forward substitution.
//
// Backward: the same equation conjugated by the exchange matrix J, so the
// substitution runs right to left through upper-triangular solves.  Both
// orders give the same Y in exact arithmetic.
DenseMatrix triangular_lyapunov(const DenseMatrix& t, const DenseMatrix& c,
                                SweepOrder order) {
  const std::size_t n = t.rows();
  DenseMatrix y(n, n);
  if (order == SweepOrder::Forward) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs = c.col(j);
      for (std::size_t k = 0; k < j; ++k) {
        const Complex tkj = t(k, j);
        if (tkj == Complex(0.0, 0.0)) {
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
          rhs[i] -= tkj * y(i, k);
        }
      }
      const Complex sj = t(j, j);
      // forward substitution on (T^* + sj I)
      for (std::size_t i = 0; i < n; ++i) {
        Complex acc = rhs[i];
        for (std::size_t k = 0; k < i; ++k) {
          acc -= std::conj(t(k, i)) * rhs[k];
        }
        rhs[i] = acc / (std::conj(t(i, i)) + sj);
      }
      y.set_col(j, rhs);
    }
    return y;
  }

  // Backward sweep on the flipped system U W + W L = C2 with
  // U = J T^* J (upper), L = J T J (lower), W = J Y J.
  const DenseMatrix u = flip_both(t.adjoint());
  const DenseMatrix l = flip_both(t);
  const DenseMatrix c2 = flip_both(c);
  DenseMatrix w(n, n);
  for (std::size_t jj = n; jj-- > 0;) {
    Vector rhs = c2.col(jj);
    for (std::size_t k = jj + 1; k < n; ++k) {
      const Complex lkj = l(k, jj);
      if (lkj == Complex(0.0, 0.0)) {
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        rhs[i] -= lkj * w(i, k);
      }
    }
    const Complex sj = l(jj, jj);
    // back substitution on (U + sj I)
    for (std::size_t ii = n; ii-- > 0;) {
      Complex acc = rhs[ii];
      for (std::size_t k = ii + 1; k < n; ++k) {
        acc -= u(ii, k) * rhs[k];
      }
      rhs[ii] = acc / (u(ii, ii) + sj);
    }
    w.set_col(jj, rhs);
  }
  return flip_both(w);
}

void require_right_half_plane(const SchurDecomposition& dec, double shift) {
  for (std::size_t i = 0; i < dec.t.rows(); ++i) {
    const Complex lam = dec.t(i, i);
    if (!(lam.real() > shift)) {
      if (shift == 0.0) {
        throw SpectrumError(
            "lyapunov: eigenvalue with non-positive real part", lam);
      }
      throw SpectrumError(
          "lyapunov: shift " + std::to_string(shift) +
              " not below the real part of eigenvalue",
          lam);
    }
  }
}

DenseMatrix solve_from_schur(const SchurDecomposition& dec, const DenseMatrix& ts,
                             const DenseMatrix& c, SweepOrder order) {
  const DenseMatrix c_tilde = dec.q.adjoint() * c * dec.q;
  const DenseMatrix y = triangular_lyapunov(ts, c_tilde, order);
  DenseMatrix g = dec.q * y * dec.q.adjoint();
  return g.hermitian_part();
}

}  // namespace

LyapunovSolution solve(const DenseMatrix& a, const DenseMatrix& c, SweepOrder order) {
  if (!a.is_square() || a.rows() != c.rows() || !c.is_square()) {
    throw DimensionError("lyapunov solve: dimension mismatch");
  }
  const SchurDecomposition dec = schur(a);
  require_right_half_plane(dec, 0.0);

  LyapunovSolution out;
  out.g = solve_from_schur(dec, dec.t, c, order);
  out.shift = 0.0;

  const DenseMatrix resid = a.adjoint() * out.g + out.g * a - c;
  out.residual = spectral_norm(resid) / std::max(spectral_norm(c), 1e-300);

  const std::vector<double> w = hermitian_eigenvalues(out.g);
  const double lmax = w.back();
  const double lmin = w.front();
  if (lmin <= 0.0 &&
      std::abs(lmin) > std::sqrt(std::numeric_limits<double>::epsilon()) * std::abs(lmax)) {
    throw NotPositiveDefiniteError(0, lmin);
  }
  if (lmin > 0.0 && lmax / lmin > 1e12) {
    out.warnings.push_back("kappa2(G) exceeds 1e12: residual reported, not enforced");
  }
  return out;
}

DenseMatrix lyap_operator_apply(const DenseMatrix& a, const DenseMatrix& x) {
  if (!a.is_square() || a.rows() != x.rows() || x.rows() != x.cols()) {
    throw DimensionError("lyap_operator_apply: shape mismatch");
  }
  return a.adjoint() * x + x * a;
}

IterationFamily inverse_iteration(const DenseMatrix& a, const DenseMatrix& g0,
                                  std::size_t steps, double shift) {
  if (!a.is_square() || a.rows() != g0.rows() || !g0.is_square()) {
    throw DimensionError("inverse_iteration: dimension mismatch");
  }
  IterationFamily family;
  family.shift = shift;
  if (steps == 0) {
    return family;
  }
  const std::size_t n = a.rows();
  // One Schur decomposition serves the whole family; the shifted iteration
  // uses T - sI, which shares the same Q.
  const SchurDecomposition dec = schur(a);
  require_right_half_plane(dec, shift);
  DenseMatrix ts = dec.t;
  for (std::size_t i = 0; i < n; ++i) {
    ts(i, i) -= shift;
  }
  DenseMatrix a_s = a;
  for (std::size_t i = 0; i < n; ++i) {
    a_s(i, i) -= shift;
  }

  DenseMatrix g_prev = g0;
  family.members.reserve(steps);
  for (std::size_t m = 1; m <= steps; ++m) {
    DenseMatrix g = solve_from_schur(dec, ts, g_prev, SweepOrder::Forward);
    const DenseMatrix resid = a_s.adjoint() * g + g * a_s - g_prev;
    const double res_val =
        spectral_norm(resid) / std::max(spectral_norm(g_prev), 1e-300);
    family.members.push_back(
        IterationFamily::Member{m, GramInnerProduct::make(g), res_val});
    g_prev = std::move(g);
  }
  return family;
}

}  // namespace lyap
