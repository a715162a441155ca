// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/factor.hpp"

#include <cmath>
#include <limits>

#include "lyap/eigen.hpp"

namespace lyap {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

double spectral_norm(const DenseMatrix& x) {
  if (x.rows() == 0 || x.cols() == 0 || x.max_abs() == 0.0) {
    return 0.0;
  }
  // Gram matrix of the smaller side; lambda_max(X^*X) = sigma_max^2.
  DenseMatrix gram =
      (x.rows() >= x.cols()) ? x.adjoint() * x : x * x.adjoint();
  const std::vector<double> w = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(w.back(), 0.0));
}

DenseMatrix cholesky(const DenseMatrix& g) {
  if (!g.is_square()) {
    throw DimensionError("cholesky: matrix not square");
  }
  const std::size_t n = g.rows();
  DenseMatrix r(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Complex acc = g(i, j);
      for (std::size_t k = 0; k < i; ++k) {
        acc -= std::conj(r(k, i)) * r(k, j);
      }
      r(i, j) = acc / r(i, i);
    }
    double pivot = g(j, j).real();
    for (std::size_t k = 0; k < j; ++k) {
      pivot -= std::norm(r(k, j));
    }
    if (!(pivot > 0.0)) {
      throw NotPositiveDefiniteError(j, pivot);
    }
    r(j, j) = std::sqrt(pivot);
  }
  return r;
}

DenseMatrix solve_triangular(const DenseMatrix& t, const DenseMatrix& b, Uplo uplo,
                             Side side, Transpose trans) {
  if (!t.is_square()) {
    throw DimensionError("solve_triangular: t not square");
  }
  const std::size_t n = t.rows();
  if ((side == Side::Left && b.rows() != n) || (side == Side::Right && b.cols() != n)) {
    throw DimensionError("solve_triangular: dimension mismatch");
  }
  const bool conj_t = (trans == Transpose::ConjTranspose);
  // entry of op(T)
  auto op = [&](std::size_t i, std::size_t k) -> Complex {
    return conj_t ? std::conj(t(k, i)) : t(i, k);
  };
  // op(T) is upper triangular iff the stored triangle and the transpose flag
  // cancel out.
  const bool eff_upper = (uplo == Uplo::Upper) != conj_t;

  double dmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dmax = std::max(dmax, std::abs(t(i, i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double di = std::abs(t(i, i));
    if (di == 0.0 || di < 1e-14 * dmax) {
      throw Error("solve_triangular: zero or sub-tolerance diagonal at index " +
                  std::to_string(i));
    }
  }

  DenseMatrix x = b;
  if (side == Side::Left) {
    // op(T) X = B, column by column
    for (std::size_t col = 0; col < x.cols(); ++col) {
      if (eff_upper) {
        for (std::size_t ii = n; ii-- > 0;) {
          Complex acc = x(ii, col);
          for (std::size_t k = ii + 1; k < n; ++k) {
            acc -= op(ii, k) * x(k, col);
          }
          x(ii, col) = acc / op(ii, ii);
        }
      } else {
        for (std::size_t ii = 0; ii < n; ++ii) {
          Complex acc = x(ii, col);
          for (std::size_t k = 0; k < ii; ++k) {
            acc -= op(ii, k) * x(k, col);
          }
          x(ii, col) = acc / op(ii, ii);
        }
      }
    }
  } else {
    // X op(T) = B: column j couples columns k with op(T)(k, j) != 0.
    if (eff_upper) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
          const Complex tkj = op(k, j);
          if (tkj == Complex(0.0, 0.0)) {
            continue;
          }
          for (std::size_t r = 0; r < x.rows(); ++r) {
            x(r, j) -= x(r, k) * tkj;
          }
        }
        const Complex tjj = op(j, j);
        for (std::size_t r = 0; r < x.rows(); ++r) {
          x(r, j) /= tjj;
        }
      }
    } else {
      for (std::size_t jj = n; jj-- > 0;) {
        for (std::size_t k = jj + 1; k < n; ++k) {
          const Complex tkj = op(k, jj);
          if (tkj == Complex(0.0, 0.0)) {
            continue;
          }
          for (std::size_t r = 0; r < x.rows(); ++r) {
            x(r, jj) -= x(r, k) * tkj;
          }
        }
        const Complex tjj = op(jj, jj);
        for (std::size_t r = 0; r < x.rows(); ++r) {
          x(r, jj) /= tjj;
        }
      }
    }
  }
  return x;
}

DenseMatrix principal_sqrt(const DenseMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("principal_sqrt: matrix not square");
  }
  const std::size_t n = a.rows();
  if (n == 0) {
    return a;
  }
  SchurDecomposition dec = schur(a);
  const double scale_a = std::max(a.frobenius_norm(), 1e-300);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex lam = dec.t(i, i);
    if (lam.real() <= 1e-12 * scale_a && std::abs(lam.imag()) <= 1e-12 * scale_a) {
      throw SpectrumError(
          "principal_sqrt: eigenvalue on the closed negative real axis", lam);
    }
  }
  // Triangular square root by superdiagonals: S(i,i) = sqrt(T(i,i)),
  // S(i,j) = (T(i,j) - sum_k S(i,k) S(k,j)) / (S(i,i) + S(j,j)).
  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = std::sqrt(dec.t(i, i));
  }
  for (std::size_t diag = 1; diag < n; ++diag) {
    for (std::size_t i = 0; i + diag < n; ++i) {
      const std::size_t j = i + diag;
      Complex acc = dec.t(i, j);
      for (std::size_t k = i + 1; k < j; ++k) {
        acc -= s(i, k) * s(k, j);
      }
      s(i, j) = acc / (s(i, i) + s(j, j));
    }
  }
  return dec.q * s * dec.q.adjoint();
}

}  // namespace lyap
