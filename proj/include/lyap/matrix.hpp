// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_MATRIX_HPP
#define LYAP_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lyap/errors.hpp"

namespace lyap {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense complex matrix, column-major storage.
///
/// The universal carrier for every matrix in this library.  Construction from
/// explicit entries rejects NaN/Inf; arithmetic on already-validated operands
/// does not re-check.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-by-row construction, mainly for small literals in tests.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(const std::vector<Complex>& d);
  static DenseMatrix diagonal(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i + j * rows_]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i + j * rows_];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  DenseMatrix adjoint() const;    // conjugate transpose
  DenseMatrix transpose() const;
  DenseMatrix hermitian_part() const;  // (A + A^*)/2, square only

  Vector col(std::size_t j) const;
  void set_col(std::size_t j, const Vector& v);

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(Complex s);
  DenseMatrix& operator*=(double s);

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a);
DenseMatrix operator*(Complex s, DenseMatrix a);
DenseMatrix operator*(double s, DenseMatrix a);

// ---- vector helpers ----

/// Conjugated dot product: sum_i conj(x_i) * y_i.
Complex dot(const Vector& x, const Vector& y);
double norm2(const Vector& v);
void scale(Vector& v, Complex s);
/// y += alpha * x
void axpy(Complex alpha, const Vector& x, Vector& y);
Vector matvec(const DenseMatrix& a, const Vector& v);
/// x * y^H as an outer-product matrix.
DenseMatrix outer(const Vector& x, const Vector& y);

}  // namespace lyap

#endif  // LYAP_MATRIX_HPP
