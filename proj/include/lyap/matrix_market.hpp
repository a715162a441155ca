// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_MATRIX_MARKET_HPP
#define LYAP_MATRIX_MARKET_HPP

#include <string>

#include "lyap/matrix.hpp"

namespace lyap {

/// Reads a Matrix Market file (array or coordinate; real, integer or
/// complex; general, symmetric or hermitian).  Symmetric/hermitian storage
/// is expanded to the full matrix.
DenseMatrix read_matrix_market(const std::string& path);

/// Writes in array/complex/general format with 17 significant digits, so a
/// read after write reproduces the entries bit for bit.
void write_matrix_market(const DenseMatrix& m, const std::string& path);

}  // namespace lyap

#endif  // LYAP_MATRIX_MARKET_HPP
