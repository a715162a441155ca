// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_ERRORS_HPP
#define LYAP_ERRORS_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyap {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or size mismatch between operands.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// An iterative kernel (QR, QL) failed to converge within its cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t dimension, double residual)
      : Error(what), dimension(dimension), residual(residual) {}
  std::size_t dimension;
  double residual;
};

/// Cholesky hit a non-positive pivot: the matrix is not positive definite.
class NotPositiveDefiniteError : public Error {
 public:
  NotPositiveDefiniteError(std::size_t index, double pivot)
      : Error("matrix not positive definite: pivot " + std::to_string(pivot) +
              " at index " + std::to_string(index)),
        index(index),
        pivot(pivot) {}
  std::size_t index;
  double pivot;
};

/// An eigenvalue violates a spectral precondition (half-plane, forbidden ray,
/// singularity).  Carries the offending value.
class SpectrumError : public Error {
 public:
  SpectrumError(const std::string& what, std::complex<double> eigenvalue)
      : Error(what), eigenvalue(eigenvalue) {}
  std::complex<double> eigenvalue;
};

}  // namespace lyap

#endif  // LYAP_ERRORS_HPP
