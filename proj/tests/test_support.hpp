// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_TEST_SUPPORT_HPP
#define LYAP_TEST_SUPPORT_HPP

#include "lyap/matrix.hpp"
#include "lyap/rng.hpp"

namespace lyap::test {

inline DenseMatrix random_complex(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  SplitMix64 rng(seed);
  DenseMatrix a(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      a(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  return a;
}

inline DenseMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  return random_complex(n, n, seed).hermitian_part();
}

inline DenseMatrix random_spd(std::size_t n, std::uint64_t seed) {
  const DenseMatrix x = random_complex(n, n, seed);
  return x.adjoint() * x + DenseMatrix::identity(n);
}

/// Random matrix with spectrum pushed into the open right half-plane.
inline DenseMatrix random_right_half_plane(std::size_t n, std::uint64_t seed) {
  DenseMatrix a = random_complex(n, n, seed);
  double row_sum_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += std::abs(a(i, j));
    }
    row_sum_max = std::max(row_sum_max, s);
  }
  // Gershgorin: shifting by the max absolute row sum keeps every disk in
  // the open right half-plane.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) += row_sum_max + 1.0;
  }
  return a;
}

inline Vector random_vector(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector v(n);
  for (auto& vi : v) {
    vi = Complex(rng.normal(), rng.normal());
  }
  return v;
}

inline double rel_error(const DenseMatrix& actual, const DenseMatrix& expected) {
  return (actual - expected).frobenius_norm() / expected.frobenius_norm();
}

}  // namespace lyap::test

#endif  // LYAP_TEST_SUPPORT_HPP
