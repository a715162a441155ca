// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lyap {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct MmHeader {
  bool array = false;       // else coordinate
  bool complex_field = false;
  bool pattern = false;
  enum class Sym { General, Symmetric, Hermitian, SkewSymmetric } sym = Sym::General;
};

MmHeader parse_header(const std::string& line, const std::string& path) {
  std::istringstream iss(line);
  std::string banner, object, format, field, symmetry;
  iss >> banner >> object >> format >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix") {
    throw Error("matrix market: malformed header in " + path + ": " + line);
  }
  MmHeader h;
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format == "array") {
    h.array = true;
  } else if (format == "coordinate") {
    h.array = false;
  } else {
    throw Error("matrix market: unsupported format '" + format + "' in " + path);
  }
  if (field == "complex") {
    h.complex_field = true;
  } else if (field == "real" || field == "integer") {
    h.complex_field = false;
  } else if (field == "pattern") {
    throw Error("matrix market: pattern field not supported in " + path);
  } else {
    throw Error("matrix market: unsupported field '" + field + "' in " + path);
  }
  if (symmetry == "general") {
    h.sym = MmHeader::Sym::General;
  } else if (symmetry == "symmetric") {
    h.sym = MmHeader::Sym::Symmetric;
  } else if (symmetry == "hermitian") {
    h.sym = MmHeader::Sym::Hermitian;
  } else if (symmetry == "skew-symmetric") {
    h.sym = MmHeader::Sym::SkewSymmetric;
  } else {
    throw Error("matrix market: unsupported symmetry '" + symmetry + "' in " + path);
  }
  return h;
}

std::string next_data_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) {
      continue;
    }
    if (line[pos] == '%') {
      continue;
    }
    return line;
  }
  return {};
}

void mirror_entry(DenseMatrix& m, std::size_t i, std::size_t j, Complex v,
                  MmHeader::Sym sym) {
  m(i, j) = v;
  if (i == j) {
    return;
  }
  switch (sym) {
    case MmHeader::Sym::General:
      break;
    case MmHeader::Sym::Symmetric:
      m(j, i) = v;
      break;
    case MmHeader::Sym::Hermitian:
      m(j, i) = std::conj(v);
      break;
    case MmHeader::Sym::SkewSymmetric:
      m(j, i) = -v;
      break;
  }
}

}  // namespace

DenseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("matrix market: cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error("matrix market: empty file " + path);
  }
  const MmHeader h = parse_header(line, path);

  line = next_data_line(in);
  if (line.empty()) {
    throw Error("matrix market: missing size line in " + path);
  }
  std::istringstream size_line(line);

  if (h.array) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(size_line >> rows >> cols)) {
      throw Error("matrix market: bad array size line in " + path);
    }
    DenseMatrix m(rows, cols);
    const bool packed = h.sym != MmHeader::Sym::General;
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t i0 = packed ? j : 0;
      for (std::size_t i = i0; i < rows; ++i) {
        line = next_data_line(in);
        if (line.empty()) {
          throw Error("matrix market: not enough entries in " + path);
        }
        std::istringstream entry(line);
        double re = 0.0;
        double im = 0.0;
        if (!(entry >> re)) {
          throw Error("matrix market: bad entry '" + line + "' in " + path);
        }
        if (h.complex_field && !(entry >> im)) {
          throw Error("matrix market: missing imaginary part in " + path);
        }
        mirror_entry(m, i, j, Complex(re, im), h.sym);
      }
    }
    if (!m.all_finite()) {
      throw Error("matrix market: non-finite entry in " + path);
    }
    return m;
  }

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;
  if (!(size_line >> rows >> cols >> nnz)) {
    throw Error("matrix market: bad coordinate size line in " + path);
  }
  DenseMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    line = next_data_line(in);
    if (line.empty()) {
      throw Error("matrix market: entry count mismatch in " + path + "; expected " +
                  std::to_string(nnz) + " entries, got " + std::to_string(k));
    }
    std::istringstream entry(line);
    std::size_t i = 0;
    std::size_t j = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(entry >> i >> j >> re)) {
      throw Error("matrix market: bad entry '" + line + "' in " + path);
    }
    if (h.complex_field && !(entry >> im)) {
      throw Error("matrix market: missing imaginary part in " + path);
    }
    if (i < 1 || j < 1 || i > rows || j > cols) {
      throw Error("matrix market: index out of range in " + path + ": " + line);
    }
    mirror_entry(m, i - 1, j - 1, Complex(re, im), h.sym);
  }
  if (!next_data_line(in).empty()) {
    throw Error("matrix market: trailing entries beyond declared count in " + path);
  }
  if (!m.all_finite()) {
    throw Error("matrix market: non-finite entry in " + path);
  }
  return m;
}

void write_matrix_market(const DenseMatrix& m, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) {
    throw Error("matrix market: cannot write " + path);
  }
  std::fprintf(f, "%%%%MatrixMarket matrix array complex general\n");
  std::fprintf(f, "%zu %zu\n", m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::fprintf(f, "%.17g %.17g\n", m(i, j).real(), m(i, j).imag());
    }
  }
  std::fclose(f);
}

}  // namespace lyap
