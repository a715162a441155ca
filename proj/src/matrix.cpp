// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/matrix.hpp"

#include <cmath>
#include <utility>

namespace lyap {

namespace {
void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}
}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("DenseMatrix: entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  if (!all_finite()) {
    throw Error("DenseMatrix: non-finite entry in construction");
  }
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  DenseMatrix out(m, n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw DimensionError("from_rows: ragged rows");
    }
    std::size_t j = 0;
    for (const auto& v : row) {
      out(i, j++) = v;
    }
    ++i;
  }
  if (!out.all_finite()) {
    throw Error("from_rows: non-finite entry");
  }
  return out;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = 1.0;
  }
  return out;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Complex>& d) {
  DenseMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out(i, i) = d[i];
  }
  return out;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& d) {
  DenseMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out(i, i) = d[i];
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::hermitian_part() const {
  if (!is_square()) {
    throw DimensionError("hermitian_part: matrix not square");
  }
  DenseMatrix out(rows_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    }
  }
  return out;
}

Vector DenseMatrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    v[i] = (*this)(i, j);
  }
  return v;
}

void DenseMatrix::set_col(std::size_t j, const Vector& v) {
  if (v.size() != rows_) {
    throw DimensionError("set_col: length mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, j) = v[i];
  }
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) {
    s += std::norm(e);
  }
  return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& e : entries_) {
    s = std::max(s, std::abs(e));
  }
  return s;
}

bool DenseMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      return false;
    }
  }
  return true;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += rhs.entries_[k];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= rhs.entries_[k];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) {
  for (auto& e : entries_) {
    e *= s;
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (auto& e : entries_) {
    e *= s;
  }
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimension mismatch " + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()));
  }
  DenseMatrix out(a.rows(), b.cols());
  // j-k-i loop order keeps the inner loop contiguous in column-major storage.
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex bkj = b(k, j);
      if (bkj == Complex(0.0, 0.0)) {
        continue;
      }
      for (std::size_t i = 0; i < a.rows(); ++i) {
        out(i, j) += a(i, k) * bkj;
      }
    }
  }
  return out;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
  a += b;
  return a;
}

DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
  a -= b;
  return a;
}

DenseMatrix operator-(DenseMatrix a) {
  a *= Complex(-1.0, 0.0);
  return a;
}

DenseMatrix operator*(Complex s, DenseMatrix a) {
  a *= s;
  return a;
}

DenseMatrix operator*(double s, DenseMatrix a) {
  a *= s;
  return a;
}

Complex dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("dot: length mismatch");
  }
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::conj(x[i]) * y[i];
  }
  return s;
}

double norm2(const Vector& v) {
  double s = 0.0;
  for (const auto& e : v) {
    s += std::norm(e);
  }
  return std::sqrt(s);
}

void scale(Vector& v, Complex s) {
  for (auto& e : v) {
    e *= s;
  }
}

void axpy(Complex alpha, const Vector& x, Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("axpy: length mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] += alpha * x[i];
  }
}

Vector matvec(const DenseMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) {
    throw DimensionError("matvec: dimension mismatch");
  }
  Vector out(a.rows(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Complex vj = v[j];
    if (vj == Complex(0.0, 0.0)) {
      continue;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      out[i] += a(i, j) * vj;
    }
  }
  return out;
}

DenseMatrix outer(const Vector& x, const Vector& y) {
  DenseMatrix out(x.size(), y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const Complex yj = std::conj(y[j]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      out(i, j) = x[i] * yj;
    }
  }
  return out;
}

}  // namespace lyap
