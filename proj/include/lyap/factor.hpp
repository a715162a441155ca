// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_FACTOR_HPP
#define LYAP_FACTOR_HPP

#include "lyap/matrix.hpp"

namespace lyap {

/// Largest singular value, from the Hermitian eigenvalues of the Gram matrix
/// of the smaller side.  Zero matrix gives 0.
double spectral_norm(const DenseMatrix& x);

/// Upper-triangular Cholesky factor R with R^* R = G for Hermitian positive
/// definite G.  A non-positive pivot raises NotPositiveDefiniteError carrying
/// the index and pivot value.
DenseMatrix cholesky(const DenseMatrix& g);

enum class Side { Left, Right };
enum class Transpose { None, ConjTranspose };
enum class Uplo { Upper, Lower };

/// Triangular solve:
///   Left:  op(T) X = B
///   Right: X op(T) = B
/// where op(T) is T or T^* per the transpose flag, and uplo names the
/// triangle of t that holds the data.  Raises on a zero (sub-tolerance)
/// diagonal entry.
DenseMatrix solve_triangular(const DenseMatrix& t, const DenseMatrix& b, Uplo uplo,
                             Side side, Transpose trans);

/// Principal matrix square root via complex Schur form and the triangular
/// square-root recurrence.  Requires the spectrum to avoid the closed
/// negative real axis.
DenseMatrix principal_sqrt(const DenseMatrix& a);

}  // namespace lyap

#endif  // LYAP_FACTOR_HPP
