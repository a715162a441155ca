// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_LYAPUNOV_HPP
#define LYAP_LYAPUNOV_HPP

#include <string>
#include <vector>

#include "lyap/gram.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

/// Solution of A^* G + G A = C, explicitly symmetrized, with its relative
/// residual ||A^*G + GA - C||_2 / ||C||_2 and the shift that was applied to A
/// (0 when none).
struct LyapunovSolution {
  DenseMatrix g;
  double residual = 0.0;
  double shift = 0.0;
  std::vector<std::string> warnings;
};

/// Column sweep direction of the triangular substitution inside the solver.
/// Forward and Backward compute the same solution through algebraically
/// distinct elimination orders; they exist so the two routes can be checked
/// against each other.
enum class SweepOrder { Forward, Backward };

/// Solves A^* G + G A = C for Hermitian positive definite C, requiring every
/// eigenvalue of A in the open right half-plane (checked on the Schur
/// diagonal).  Schur-based: transform to triangular form, substitute column
/// by column, transform back, symmetrize.
LyapunovSolution solve(const DenseMatrix& a, const DenseMatrix& c,
                       SweepOrder order = SweepOrder::Forward);

/// The Lyapunov operator L X = A^* X + X A applied to X.
DenseMatrix lyap_operator_apply(const DenseMatrix& a, const DenseMatrix& x);

/// Family of inner products from (shifted) Lyapunov inverse iteration:
/// (A - sI)^* G_m + G_m (A - sI) = G_{m-1}, starting from G_0.
struct IterationFamily {
  struct Member {
    std::size_t m = 0;
    GramInnerProduct ip;
    double residual = 0.0;  // recurrence residual relative to ||G_{m-1}||
  };
  std::vector<Member> members;
  double shift = 0.0;
  std::string c0_label;
};

/// Runs `steps` iterations.  The Schur decomposition of A is computed once
/// and reused across the family.  Requires Re(lambda) > shift for every
/// eigenvalue of A.
IterationFamily inverse_iteration(const DenseMatrix& a, const DenseMatrix& g0,
                                  std::size_t steps, double shift = 0.0);

}  // namespace lyap

#endif  // LYAP_LYAPUNOV_HPP
