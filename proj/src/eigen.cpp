// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex eigensolvers: Hermitian eigendecomposition via Householder
// tridiagonalization + implicit-shift QL, and complex Schur via Householder
// Hessenberg reduction + single-shift QR with Wilkinson shifts.  Unblocked,
// LAPACK-style kernels; adequate and deterministic at n <= 256.

#include "lyap/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lyap/rng.hpp"

namespace lyap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double hypot3(double x, double y, double z) {
  return std::sqrt(x * x + y * y + z * z);
}

// Generates an elementary reflector H = I - tau * v * v^H with v = [1; x]
// such that H^H * [alpha; x] = [beta; 0] and beta is real.  Overwrites x with
// the reflector tail and alpha with beta.  Returns tau.
Complex make_reflector(Complex& alpha, Vector& x) {
  double xnorm = norm2(x);
  if (xnorm == 0.0 && alpha.imag() == 0.0) {
    return Complex(0.0, 0.0);
  }
  double beta = -std::copysign(hypot3(alpha.real(), alpha.imag(), xnorm), alpha.real());
  const Complex tau((beta - alpha.real()) / beta, -alpha.imag() / beta);
  const Complex rescale = Complex(1.0, 0.0) / (alpha - beta);
  scale(x, rescale);
  alpha = Complex(beta, 0.0);
  return tau;
}

// ---------------------------------------------------------------------------
// Hermitian path
// ---------------------------------------------------------------------------

struct Tridiagonalization {
  std::vector<double> d;  // diagonal
  std::vector<double> e;  // subdiagonal, length n (last entry zero)
  // Householder reflectors: reflector i acts on rows i+1..n-1.
  std::vector<Vector> v;
  std::vector<Complex> tau;
};

// Reduces a Hermitian matrix (given as a full working copy, modified in
// place) to real symmetric tridiagonal form: Q^* H Q = T with
// Q = H_0 H_1 ... H_{n-3}.
Tridiagonalization tridiagonalize(DenseMatrix w) {
  const std::size_t n = w.rows();
  Tridiagonalization out;
  out.d.assign(n, 0.0);
  out.e.assign(n, 0.0);
  if (n == 0) {
    return out;
  }
  out.v.reserve(n >= 2 ? n - 2 : 0);
  out.tau.reserve(n >= 2 ? n - 2 : 0);

  for (std::size_t i = 0; i + 2 < n; ++i) {
    const std::size_t m = n - i - 1;  // length of the column below the diagonal
    Complex alpha = w(i + 1, i);
    Vector tail(m - 1);
    for (std::size_t k = 0; k < m - 1; ++k) {
      tail[k] = w(i + 2 + k, i);
    }
    const Complex tau = make_reflector(alpha, tail);
    out.e[i] = alpha.real();

    Vector v(m);
    v[0] = Complex(1.0, 0.0);
    for (std::size_t k = 0; k < m - 1; ++k) {
      v[k + 1] = tail[k];
    }

    if (tau != Complex(0.0, 0.0)) {
      // x = tau * W22 * v over the trailing block, then the symmetric
      // correction w = x - (tau/2)(x^H v) v and the rank-2 update.
      Vector x(m, Complex(0.0, 0.0));
      for (std::size_t j = 0; j < m; ++j) {
        const Complex vj = v[j];
        if (vj == Complex(0.0, 0.0)) {
          continue;
        }
        for (std::size_t r = 0; r < m; ++r) {
          x[r] += w(i + 1 + r, i + 1 + j) * vj;
        }
      }
      scale(x, tau);
      const Complex corr = -0.5 * tau * dot(x, v);
      axpy(corr, v, x);
      for (std::size_t j = 0; j < m; ++j) {
        const Complex vj = std::conj(v[j]);
        const Complex xj = std::conj(x[j]);
        for (std::size_t r = 0; r < m; ++r) {
          w(i + 1 + r, i + 1 + j) -= v[r] * xj + x[r] * vj;
        }
      }
    }
    out.d[i] = w(i, i).real();
    out.v.push_back(std::move(v));
    out.tau.push_back(tau);
  }
  if (n >= 2) {
    // Remaining 2x2 corner: make the last subdiagonal entry real by a
    // unitary diagonal similarity absorbed into the reflector list as a
    // length-1 "reflector" acting on the final row.
    Complex last = w(n - 1, n - 2);
    const double a = std::abs(last);
    out.e[n - 2] = a;
    out.d[n - 2] = w(n - 2, n - 2).real();
    Vector phase(1);
    // Q column n-1 must carry the phase so that Q^* H Q has real subdiagonal.
    phase[0] = (a == 0.0) ? Complex(1.0, 0.0) : last / a;
    out.v.push_back(std::move(phase));
    out.tau.push_back(Complex(0.0, 0.0));  // marker: diagonal phase, not a reflector
  }
  if (n >= 1) {
    out.d[n - 1] = w(n - 1, n - 1).real();
  }
  return out;
}

// Forms Q = H_0 H_1 ... H_{n-3} * diag-phase explicitly.
DenseMatrix form_tridiag_q(const Tridiagonalization& t, std::size_t n) {
  DenseMatrix q = DenseMatrix::identity(n);
  if (n < 2) {
    return q;
  }
  // Apply the trailing phase first (it is rightmost in the product).
  const Complex phase = t.v.back()[0];
  for (std::size_t i = 0; i < n; ++i) {
    q(i, n - 1) *= phase;
  }
  if (n == 2) {
    return q;
  }
  for (std::size_t ii = n - 2; ii-- > 0;) {  // ii = n-3 .. 0
    const Vector& v = t.v[ii];
    const Complex tau = t.tau[ii];
    if (tau == Complex(0.0, 0.0)) {
      continue;
    }
    const std::size_t off = ii + 1;
    const std::size_t m = n - off;
    // q(off:, off:) -= tau * v * (v^H q(off:, off:))
    for (std::size_t j = off; j < n; ++j) {
      Complex s(0.0, 0.0);
      for (std::size_t r = 0; r < m; ++r) {
        s += std::conj(v[r]) * q(off + r, j);
      }
      s *= tau;
      for (std::size_t r = 0; r < m; ++r) {
        q(off + r, j) -= v[r] * s;
      }
    }
  }
  return q;
}

// Applies Q to a single vector: u <- Q u.
void apply_tridiag_q(const Tridiagonalization& t, Vector& u) {
  const std::size_t n = u.size();
  if (n < 2) {
    return;
  }
  u[n - 1] *= t.v.back()[0];
  if (n == 2) {
    return;
  }
  for (std::size_t ii = n - 2; ii-- > 0;) {
    const Vector& v = t.v[ii];
    const Complex tau = t.tau[ii];
    if (tau == Complex(0.0, 0.0)) {
      continue;
    }
    const std::size_t off = ii + 1;
    Complex s(0.0, 0.0);
    for (std::size_t r = 0; r < v.size(); ++r) {
      s += std::conj(v[r]) * u[off + r];
    }
    s *= tau;
    for (std::size_t r = 0; r < v.size(); ++r) {
      u[off + r] -= v[r] * s;
    }
  }
}

// Implicit-shift QL on a real symmetric tridiagonal (d, e).  If z is given,
// the rotations are accumulated into its columns (z starts as the
// tridiagonalizing unitary).  Classic tql2-style sweep with Wilkinson shifts.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, DenseMatrix* z,
                std::size_t dim_for_error) {
  const std::size_t n = d.size();
  if (n <= 1) {
    return;
  }
  const int max_iter = 50;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd + 1e-300) {
          break;
        }
      }
      if (m != l) {
        if (iter++ == max_iter) {
          throw ConvergenceError("hermitian eigensolver: QL failed to converge",
                                 dim_for_error, std::abs(e[l]));
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (std::size_t k = 0; k < z->rows(); ++k) {
              const Complex f2 = (*z)(k, i + 1);
              (*z)(k, i + 1) = s * (*z)(k, i) + c * f2;
              (*z)(k, i) = c * (*z)(k, i) - s * f2;
            }
          }
        }
        if (underflow) {
          continue;
        }
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void check_hermitian_input(const DenseMatrix& h) {
  if (!h.is_square()) {
    throw DimensionError("hermitian_eigen: matrix not square");
  }
  double asym = 0.0;
  double scale_f = 0.0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
      asym += std::norm(h(i, j) - std::conj(h(j, i)));
      scale_f += std::norm(h(i, j));
    }
  }
  if (std::sqrt(asym) > 1e-12 * std::max(std::sqrt(scale_f), 1e-300) && scale_f > 0.0) {
    throw Error("hermitian_eigen: input is not Hermitian within tolerance");
  }
}

// Solves (T - lam) x = b for symmetric tridiagonal T, Gaussian elimination
// with partial pivoting.  Zero pivots are replaced by a tiny multiple of the
// matrix scale so inverse iteration can proceed.
void tridiag_shifted_solve(const std::vector<double>& d, const std::vector<double>& e,
                           double lam, Vector::value_type* /*unused*/,
                           std::vector<double>& b) {
  const std::size_t n = d.size();
  std::vector<double> p(n), q(n, 0.0), s(n, 0.0);
  double scale_t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale_t = std::max(scale_t, std::abs(d[i]) + (i + 1 < n ? std::abs(e[i]) : 0.0));
  }
  const double tiny = std::max(scale_t, 1.0) * 1e-300 / 1e-280;  // ~1e-20 * scale
  double cur_d = d[0] - lam;
  double cur_q = (n > 1) ? e[0] : 0.0;
  double cur_s = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double sub = e[i];
    const double next_d0 = d[i + 1] - lam;
    const double next_q0 = (i + 2 < n) ? e[i + 1] : 0.0;
    if (std::abs(sub) > std::abs(cur_d)) {
      // swap rows i and i+1
      p[i] = sub;
      q[i] = next_d0;
      s[i] = next_q0;
      const double mult = cur_d / p[i];
      std::swap(b[i], b[i + 1]);
      b[i + 1] -= mult * b[i];
      cur_d = cur_q - mult * q[i];
      cur_q = cur_s - mult * s[i];
      cur_s = 0.0;
    } else {
      p[i] = (cur_d == 0.0) ? tiny : cur_d;
      q[i] = cur_q;
      s[i] = cur_s;
      const double mult = sub / p[i];
      b[i + 1] -= mult * b[i];
      cur_d = next_d0 - mult * q[i];
      cur_q = next_q0 - mult * s[i];
      cur_s = 0.0;
    }
  }
  p[n - 1] = (cur_d == 0.0) ? tiny : cur_d;
  q[n - 1] = 0.0;
  s[n - 1] = 0.0;
  // back substitution
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = b[ii];
    if (ii + 1 < n) {
      acc -= q[ii] * b[ii + 1];
    }
    if (ii + 2 < n) {
      acc -= s[ii] * b[ii + 2];
    }
    b[ii] = acc / p[ii];
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const DenseMatrix& h) {
  check_hermitian_input(h);
  const std::size_t n = h.rows();
  HermitianEigen out;
  if (n == 0) {
    out.vectors = DenseMatrix(0, 0);
    return out;
  }
  Tridiagonalization t = tridiagonalize(h.hermitian_part());
  DenseMatrix z = form_tridiag_q(t, n);
  std::vector<double> d = t.d;
  std::vector<double> e = t.e;
  tridiag_ql(d, e, &z, n);

  // sort ascending, permuting eigenvector columns
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = d[perm[j]];
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors(i, j) = z(i, perm[j]);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& h) {
  check_hermitian_input(h);
  const std::size_t n = h.rows();
  if (n == 0) {
    return {};
  }
  Tridiagonalization t = tridiagonalize(h.hermitian_part());
  std::vector<double> d = t.d;
  std::vector<double> e = t.e;
  tridiag_ql(d, e, nullptr, n);
  std::sort(d.begin(), d.end());
  return d;
}

ExtremeEigenPair hermitian_extreme(const DenseMatrix& h, bool largest) {
  check_hermitian_input(h);
  const std::size_t n = h.rows();
  if (n == 0) {
    throw DimensionError("hermitian_extreme: empty matrix");
  }
  if (n == 1) {
    return {h(0, 0).real(), Vector{Complex(1.0, 0.0)}};
  }
  Tridiagonalization t = tridiagonalize(h.hermitian_part());
  std::vector<double> d = t.d;
  std::vector<double> e = t.e;
  {
    std::vector<double> dw = d;
    std::vector<double> ew = e;
    tridiag_ql(dw, ew, nullptr, n);
    std::sort(dw.begin(), dw.end());
    const double target = largest ? dw.back() : dw.front();

    double scale_t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      scale_t = std::max(scale_t, std::abs(d[i]) + std::abs(e[i]));
    }
    scale_t = std::max(scale_t, 1e-300);

    // Inverse iteration on the tridiagonal for the target eigenvalue,
    // deterministic start vector.
    SplitMix64 rng(0x9d2c5680u);
    std::vector<double> x(n);
    for (auto& xi : x) {
      xi = 2.0 * rng.uniform01() - 1.0;
    }
    double lam = target + (largest ? 1.0 : -1.0) * 16.0 * kEps * scale_t;
    bool ok = false;
    for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
      for (int it = 0; it < 5; ++it) {
        tridiag_shifted_solve(d, e, lam, nullptr, x);
        double nx = 0.0;
        for (double xi : x) {
          nx += xi * xi;
        }
        nx = std::sqrt(nx);
        for (auto& xi : x) {
          xi /= nx;
        }
        // residual ||(T - target) x||
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double ti = (d[i] - target) * x[i];
          if (i > 0) {
            ti += e[i - 1] * x[i - 1];
          }
          if (i + 1 < n) {
            ti += e[i] * x[i + 1];
          }
          res += ti * ti;
        }
        if (std::sqrt(res) <= 1e-10 * scale_t) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        lam = target + (largest ? 1.0 : -1.0) * std::pow(64.0, attempt + 1) * kEps * scale_t;
      }
    }
    if (ok) {
      Vector u(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = Complex(x[i], 0.0);
      }
      apply_tridiag_q(t, u);
      const double nu = norm2(u);
      scale(u, Complex(1.0 / nu, 0.0));
      return {target, std::move(u)};
    }
  }
  // Fallback: full decomposition (rare; clustered extreme eigenvalues where
  // inverse iteration stalled).
  HermitianEigen full = hermitian_eigen(h);
  const std::size_t idx = largest ? n - 1 : 0;
  return {full.values[idx], full.vectors.col(idx)};
}

// ---------------------------------------------------------------------------
// Schur path
// ---------------------------------------------------------------------------

namespace {

struct ComplexGivens {
  double c;
  Complex s;
  Complex r;
};

ComplexGivens make_givens(Complex f, Complex g) {
  if (g == Complex(0.0, 0.0)) {
    return {1.0, Complex(0.0, 0.0), f};
  }
  if (f == Complex(0.0, 0.0)) {
    const double ag = std::abs(g);
    return {0.0, std::conj(g) / ag, Complex(ag, 0.0)};
  }
  const double af = std::abs(f);
  const double den = std::hypot(af, std::abs(g));
  const Complex fs = f / af;
  return {af / den, fs * std::conj(g) / den, fs * den};
}

// Hessenberg reduction: Q^* A Q = H with Q = H_0 ... H_{n-3}.  Returns the
// reflectors and leaves the Hessenberg form in a.
struct HessenbergReduction {
  std::vector<Vector> v;
  std::vector<Complex> tau;
};

HessenbergReduction hessenberg(DenseMatrix& a) {
  const std::size_t n = a.rows();
  HessenbergReduction red;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const std::size_t m = n - i - 1;
    Complex alpha = a(i + 1, i);
    Vector tail(m - 1);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      tail[k] = a(i + 2 + k, i);
    }
    const Complex tau = make_reflector(alpha, tail);
    Vector v(m);
    v[0] = Complex(1.0, 0.0);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      v[k + 1] = tail[k];
    }
    a(i + 1, i) = alpha;
    for (std::size_t k = i + 2; k < n; ++k) {
      a(k, i) = Complex(0.0, 0.0);
    }
    if (tau != Complex(0.0, 0.0)) {
      // right: A(:, i+1:) -= tau (A(:, i+1:) v) v^H
      for (std::size_t r = 0; r < n; ++r) {
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < m; ++k) {
          acc += a(r, i + 1 + k) * v[k];
        }
        acc *= tau;
        for (std::size_t k = 0; k < m; ++k) {
          a(r, i + 1 + k) -= acc * std::conj(v[k]);
        }
      }
      // left: A(i+1:, i+1:) -= conj(tau) v (v^H A(i+1:, i+1:))
      for (std::size_t c = i + 1; c < n; ++c) {
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < m; ++k) {
          acc += std::conj(v[k]) * a(i + 1 + k, c);
        }
        acc *= std::conj(tau);
        for (std::size_t k = 0; k < m; ++k) {
          a(i + 1 + k, c) -= v[k] * acc;
        }
      }
    }
    red.v.push_back(std::move(v));
    red.tau.push_back(tau);
  }
  return red;
}

DenseMatrix form_hessenberg_q(const HessenbergReduction& red, std::size_t n) {
  DenseMatrix q = DenseMatrix::identity(n);
  for (std::size_t ii = red.v.size(); ii-- > 0;) {
    const Vector& v = red.v[ii];
    const Complex tau = red.tau[ii];
    if (tau == Complex(0.0, 0.0)) {
      continue;
    }
    const std::size_t off = ii + 1;
    const std::size_t m = v.size();
    for (std::size_t j = off; j < n; ++j) {
      Complex s(0.0, 0.0);
      for (std::size_t r = 0; r < m; ++r) {
        s += std::conj(v[r]) * q(off + r, j);
      }
      s *= tau;
      for (std::size_t r = 0; r < m; ++r) {
        q(off + r, j) -= v[r] * s;
      }
    }
  }
  return q;
}

Complex wilkinson_shift(const DenseMatrix& h, std::size_t m) {
  const Complex a = h(m - 1, m - 1);
  const Complex b = h(m - 1, m);
  const Complex c = h(m, m - 1);
  const Complex dd = h(m, m);
  const Complex tr = a + dd;
  const Complex disc = std::sqrt((a - dd) * (a - dd) + 4.0 * b * c);
  const Complex l1 = 0.5 * (tr + disc);
  const Complex l2 = 0.5 * (tr - disc);
  return std::abs(l1 - dd) < std::abs(l2 - dd) ? l1 : l2;
}

}  // namespace

SchurDecomposition schur(const DenseMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("schur: matrix not square");
  }
  const std::size_t n = a.rows();
  SchurDecomposition out;
  if (n == 0) {
    out.q = DenseMatrix(0, 0);
    out.t = DenseMatrix(0, 0);
    return out;
  }
  DenseMatrix h = a;
  HessenbergReduction red = hessenberg(h);
  DenseMatrix q = form_hessenberg_q(red, n);

  const double hnorm = std::max(h.frobenius_norm(), 1e-300);

  if (n > 1) {
    std::size_t ihi = n - 1;
    int iters_this_eig = 0;
    while (true) {
      // deflation scan for the block ending at ihi
      std::size_t l = 0;
      for (std::size_t i = ihi; i > 0; --i) {
        double thr = kEps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
        if (thr == 0.0) {
          thr = kEps * hnorm;
        }
        if (std::abs(h(i, i - 1)) <= thr) {
          h(i, i - 1) = Complex(0.0, 0.0);
          l = i;
          break;
        }
      }
      if (l == ihi) {
        iters_this_eig = 0;
        if (ihi == 0) {
          break;
        }
        --ihi;
        continue;
      }

      if (++iters_this_eig > 40) {
        throw ConvergenceError("schur: QR iteration failed to deflate", n,
                               std::abs(h(ihi, ihi - 1)));
      }
      Complex sigma;
      if (iters_this_eig % 12 == 0) {
        // exceptional shift to break potential cycles
        sigma = h(ihi, ihi) + Complex(0.75 * std::abs(h(ihi, ihi - 1)), 0.0);
      } else {
        sigma = wilkinson_shift(h, ihi);
      }

      Complex x = h(l, l) - sigma;
      Complex y = h(l + 1, l);
      for (std::size_t k = l; k < ihi; ++k) {
        if (k > l) {
          x = h(k, k - 1);
          y = h(k + 1, k - 1);
        }
        const ComplexGivens giv = make_givens(x, y);
        if (k > l) {
          h(k, k - 1) = giv.r;
          h(k + 1, k - 1) = Complex(0.0, 0.0);
        }
        // left rotation on rows k, k+1
        for (std::size_t j = k; j < n; ++j) {
          const Complex t1 = h(k, j);
          const Complex t2 = h(k + 1, j);
          h(k, j) = giv.c * t1 + giv.s * t2;
          h(k + 1, j) = -std::conj(giv.s) * t1 + giv.c * t2;
        }
        // right rotation on columns k, k+1
        const std::size_t top = std::min(k + 2, ihi);
        for (std::size_t i = 0; i <= top; ++i) {
          const Complex t1 = h(i, k);
          const Complex t2 = h(i, k + 1);
          h(i, k) = giv.c * t1 + std::conj(giv.s) * t2;
          h(i, k + 1) = -giv.s * t1 + giv.c * t2;
        }
        // accumulate into q
        for (std::size_t i = 0; i < n; ++i) {
          const Complex t1 = q(i, k);
          const Complex t2 = q(i, k + 1);
          q(i, k) = giv.c * t1 + std::conj(giv.s) * t2;
          q(i, k + 1) = -giv.s * t1 + giv.c * t2;
        }
      }
    }
  }

  // exact zero below the diagonal
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      h(i, j) = Complex(0.0, 0.0);
    }
  }
  out.q = std::move(q);
  out.t = std::move(h);
  return out;
}

std::vector<Complex> eigenvalues(const DenseMatrix& a) {
  return schur(a).eigenvalues();
}

}  // namespace lyap
