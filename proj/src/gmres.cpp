// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/gmres.hpp"

#include <cmath>

#include "lyap/factor.hpp"
#include "lyap/rng.hpp"

namespace lyap {

namespace {

struct Rotation {
  double c;
  Complex s;
};

// Complex Givens rotation zeroing g against f: [c s; -conj(s) c] [f; g] = [r; 0].
Rotation make_rotation(Complex f, double g, Complex& r) {
  if (g == 0.0) {
    r = f;
    return {1.0, Complex(0.0, 0.0)};
  }
  if (f == Complex(0.0, 0.0)) {
    r = Complex(g, 0.0);
    return {0.0, Complex(1.0, 0.0)};
  }
  const double af = std::abs(f);
  const double den = std::hypot(af, g);
  const Complex fs = f / af;
  r = fs * den;
  return {af / den, fs * (g / den)};
}

}  // namespace

GmresTrace run(const DenseMatrix& a, const Vector& b, const GmresOptions& opts) {
  if (!a.is_square()) {
    throw DimensionError("gmres: matrix not square");
  }
  const std::size_t n = a.rows();
  if (b.size() != n) {
    throw DimensionError("gmres: right-hand side length mismatch");
  }
  const double beta0 = norm2(b);
  if (beta0 == 0.0) {
    throw Error("gmres: zero right-hand side");
  }
  std::size_t max_iter = opts.max_iter == 0 ? n : std::min(opts.max_iter, n);

  const double anorm = spectral_norm(a);
  const double breakdown_tol = 1e-14 * anorm;

  std::vector<Vector> v;
  v.reserve(max_iter + 1);
  {
    Vector v0 = b;
    scale(v0, Complex(1.0 / beta0, 0.0));
    v.push_back(std::move(v0));
  }

  GmresTrace trace;
  trace.rel_residuals.reserve(max_iter + 1);
  trace.rel_residuals.push_back(1.0);

  // rotated upper-triangular system and raw Hessenberg columns
  DenseMatrix r_fac(max_iter, max_iter);
  DenseMatrix hbar(max_iter + 1, max_iter);
  Vector g(max_iter + 1, Complex(0.0, 0.0));
  g[0] = beta0;
  std::vector<Rotation> rots;
  rots.reserve(max_iter);

  std::size_t k = 0;
  while (k < max_iter) {
    Vector w = matvec(a, v[k]);
    Vector hcol(k + 1);
    // modified Gram-Schmidt with one unconditional reorthogonalization pass
    for (std::size_t i = 0; i <= k; ++i) {
      const Complex hik = dot(v[i], w);
      hcol[i] = hik;
      axpy(-hik, v[i], w);
    }
    for (std::size_t i = 0; i <= k; ++i) {
      const Complex corr = dot(v[i], w);
      hcol[i] += corr;
      axpy(-corr, v[i], w);
    }
    const double hk1 = norm2(w);
    const bool happy = hk1 <= breakdown_tol;
    for (std::size_t i = 0; i <= k; ++i) {
      hbar(i, k) = hcol[i];
    }
    hbar(k + 1, k) = hk1;

    if (!happy) {
      scale(w, Complex(1.0 / hk1, 0.0));
      v.push_back(std::move(w));
    }

    // apply the accumulated rotations to the new column
    for (std::size_t i = 0; i < k; ++i) {
      const Complex t1 = hcol[i];
      const Complex t2 = hcol[i + 1];
      hcol[i] = rots[i].c * t1 + rots[i].s * t2;
      hcol[i + 1] = -std::conj(rots[i].s) * t1 + rots[i].c * t2;
    }
    Complex rkk;
    rots.push_back(make_rotation(hcol[k], hk1, rkk));
    hcol[k] = rkk;
    for (std::size_t i = 0; i <= k; ++i) {
      r_fac(i, k) = hcol[i];
    }
    // rotate the right-hand side; |g[k+1]| is the new residual norm
    const Complex gk = g[k];
    g[k] = rots[k].c * gk;  // + s * 0
    g[k + 1] = -std::conj(rots[k].s) * gk;
    trace.rel_residuals.push_back(std::abs(g[k + 1]) / beta0);

    ++k;
    if (happy) {
      trace.breakdown = true;
      break;
    }
    if (opts.rtol > 0.0 && trace.rel_residuals.back() <= opts.rtol) {
      break;
    }
  }
  trace.iterations = k;

  // solve R y = g for the iterate and assemble x
  Vector y(k, Complex(0.0, 0.0));
  for (std::size_t ii = k; ii-- > 0;) {
    Complex acc = g[ii];
    for (std::size_t j = ii + 1; j < k; ++j) {
      acc -= r_fac(ii, j) * y[j];
    }
    y[ii] = acc / r_fac(ii, ii);
  }
  trace.solution.assign(n, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    axpy(y[j], v[j], trace.solution);
  }

  if (opts.capture_basis) {
    trace.basis = DenseMatrix(n, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      trace.basis.set_col(j, v[j]);
    }
    trace.hessenberg = DenseMatrix(k + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i <= j + 1; ++i) {
        trace.hessenberg(i, j) = hbar(i, j);
      }
    }
  }
  return trace;
}

double polynomial_oracle(const DenseMatrix& a, const Vector& b, std::size_t k) {
  if (!a.is_square() || a.rows() != b.size()) {
    throw DimensionError("polynomial_oracle: dimension mismatch");
  }
  const std::size_t n = a.rows();
  if (k > n) {
    throw DimensionError("polynomial_oracle: k exceeds dimension");
  }
  const double bnorm = norm2(b);
  if (bnorm == 0.0) {
    throw Error("polynomial_oracle: zero right-hand side");
  }
  if (k == 0) {
    return 1.0;
  }
  // Krylov directions with per-column scaling: w_j spans A^j b.
  std::vector<Vector> w;
  w.reserve(k);
  Vector cur = b;
  scale(cur, Complex(1.0 / bnorm, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    cur = matvec(a, cur);
    const double nrm = norm2(cur);
    if (nrm == 0.0) {
      break;  // Krylov space exhausted at an exact zero
    }
    scale(cur, Complex(1.0 / nrm, 0.0));
    w.push_back(cur);
  }
  // Orthonormal basis of span{A b, ..., A^k b} by two-pass MGS; dependent
  // columns are dropped (they cannot lower the minimum).
  std::vector<Vector> q;
  q.reserve(w.size());
  for (auto& col : w) {
    Vector u = col;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& qi : q) {
        axpy(-dot(qi, u), qi, u);
      }
    }
    const double nrm = norm2(u);
    if (nrm > 1e-10) {
      scale(u, Complex(1.0 / nrm, 0.0));
      q.push_back(std::move(u));
    }
  }
  // distance from b to the span
  Vector res = b;
  for (const auto& qi : q) {
    axpy(-dot(qi, res), qi, res);
  }
  return norm2(res) / bnorm;
}

std::vector<GmresTrace> trial_ensemble(const DenseMatrix& a, std::size_t trials,
                                       std::uint64_t seed, std::size_t max_iter) {
  if (trials == 0) {
    throw Error("trial_ensemble: need at least one trial");
  }
  const std::size_t n = a.rows();
  std::vector<GmresTrace> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = SplitMix64::mix(seed, t);
    SplitMix64 rng(trial_seed);
    Vector b(n);
    for (auto& bi : b) {
      bi = Complex(rng.normal(), 0.0);
    }
    GmresOptions opts;
    opts.max_iter = max_iter;
    GmresTrace trace = run(a, b, opts);
    trace.seed = trial_seed;
    trace.label = "trial" + std::to_string(t);
    out.push_back(std::move(trace));
  }
  return out;
}

}  // namespace lyap
