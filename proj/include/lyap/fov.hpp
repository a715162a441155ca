// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_FOV_HPP
#define LYAP_FOV_HPP

#include <string>
#include <vector>

#include "lyap/gram.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

/// Discretized boundary of the numerical range W(M) (or W_G(A) when the
/// sweep runs on A_G = R A R^{-1}).
///
/// For each grid angle theta, support h(theta) is the largest eigenvalue of
/// (e^{i theta} M + e^{-i theta} M^*)/2 and the boundary point is the
/// Rayleigh quotient of M at its top eigenvector.  mu is the leftmost real
/// part (the smallest eigenvalue of the Hermitian part, computed directly so
/// it is grid independent); radius is the numerical radius (grid maximum of
/// the support refined by one golden-section pass).
struct FovBoundary {
  std::vector<double> angles;
  std::vector<double> support;
  std::vector<Complex> points;
  double mu = 0.0;
  double radius = 0.0;
  std::string matrix_label;

  /// Supporting-hyperplane membership test: Re(e^{i theta} z) <= h(theta)
  /// + tol for every grid angle.
  bool contains(Complex z, double tol) const;
};

/// Sweeps the numerical range boundary of a (Euclidean inner product).
/// n_angles must be >= 4; odd counts are rounded up so the grid hits pi.
FovBoundary boundary(const DenseMatrix& a, std::size_t n_angles,
                     const std::string& label = "");

/// Same for W_G(A), sweeping A_G = R A R^{-1}.
FovBoundary boundary(const DenseMatrix& a, const GramInnerProduct& ip,
                     std::size_t n_angles, const std::string& label = "");

/// min Re W(A) = lambda_min of the Hermitian part (of A_G when ip given).
double mu(const DenseMatrix& a);
double mu(const DenseMatrix& a, const GramInnerProduct& ip);

/// The (mu, ||A||) pair that encloses W in a half-plane/disk intersection.
struct DiskSegment {
  double mu;
  double norm;
};
DiskSegment disk_segment(const DenseMatrix& a);
DiskSegment disk_segment(const DenseMatrix& a, const GramInnerProduct& ip);

/// W(A) with the centered disk of radius 1/r(A^{-1}) removed: boundary
/// points inside the disk are replaced by points of the cut circle clipped
/// to W(A).  Requires nonsingular A (Schur diagonal above 1e-12 * ||A||).
struct OmegaSet {
  std::vector<Complex> boundary_points;
  double cut_radius;
};
OmegaSet omega_set(const DenseMatrix& a, std::size_t n_angles);

/// Boundary of W(A^{1/2})^2: the boundary of W(principal_sqrt(A)) with every
/// point squared.
std::vector<Complex> power_fov(const DenseMatrix& a, std::size_t n_angles);

}  // namespace lyap

#endif  // LYAP_FOV_HPP
