// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_GALLERY_HPP
#define LYAP_GALLERY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lyap/matrix.hpp"

namespace lyap {

/// Which open half-plane holds the spectrum of the stored matrix.  Problems
/// tagged Left are analyzed after the rotation theta = pi, i.e. as -A, so
/// every downstream module can assume right-half-plane spectra.
enum class HalfPlane { Right, Left };

/// A benchmark matrix, optionally with an application-supplied inner-product
/// matrix G and Lyapunov right-hand side C.
struct GalleryProblem {
  DenseMatrix a;
  std::optional<DenseMatrix> g_explicit;
  std::optional<DenseMatrix> c_explicit;
  HalfPlane half_plane = HalfPlane::Right;
  std::string label;
  std::map<std::string, double> parameters;

  /// The matrix all analysis runs on: a, or -a for left-half-plane problems.
  DenseMatrix analysis_matrix() const;

  /// ||A_eff^* G + G A_eff - C||_2 / ||C||_2 with A_eff = analysis_matrix(),
  /// for problems that carry both G and C.
  double lyapunov_residual() const;
};

/// Bidiagonal with unit diagonal and constant superdiagonal alpha (a scaled
/// Jordan block).
DenseMatrix jordan_matrix(std::size_t n, double alpha);

/// Bidiagonal with unit diagonal and superdiagonal gamma/j for j = 1..n-1.
DenseMatrix integration_matrix(std::size_t n, double gamma);

/// First-order form of the optimally damped discrete string: N interior
/// points, mass M = tridiag(h/6, 2h/3, h/6), stiffness
/// K = tridiag(-1/h, 2/h, -1/h), h = 1/(N+1), damping D = 2aM with
/// a = sqrt(lambda_min(M^-1 K)).  Returns the 2N x 2N system matrix (spectrum
/// in the left half-plane), the explicit G, and C = blkdiag(K, M).
GalleryProblem damped_string(std::size_t big_n);

/// Preconditioned saddle-point matrix A = [[eta I, B^*], [-B, 0]] with
/// m x n standard-normal B (regenerated with an incremented seed if rank
/// deficient), G = [[I, (2/eta)B^*], [(2/eta)B, I]], and C = A^*G + GA.
/// eta = nullopt selects 2||B||_2 + 0.1.
GalleryProblem kkt_matrix(std::size_t m, std::size_t n, std::optional<double> eta,
                          std::uint64_t seed);

}  // namespace lyap

#endif  // LYAP_GALLERY_HPP
