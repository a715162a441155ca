// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/fov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"

namespace lyap {

namespace {

constexpr double kPi = 3.14159265358979323846;

DenseMatrix rotated_hermitian_part(const DenseMatrix& m, double theta) {
  const Complex phase = std::polar(1.0, theta);
  const std::size_t n = m.rows();
  DenseMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      h(i, j) = 0.5 * (phase * m(i, j) + std::conj(phase * m(j, i)));
    }
  }
  return h;
}

double support_value(const DenseMatrix& m, double theta) {
  return hermitian_eigenvalues(rotated_hermitian_part(m, theta)).back();
}

// Runs fn(k) for k in [0, count) across a few worker threads.  Each index
// writes to its own output slot, so the result is order independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  workers = std::min<unsigned>(std::max(workers, 1u), 8u);
  if (workers <= 1 || count < 8) {
    for (std::size_t k = 0; k < count; ++k) {
      fn(k);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t k = w; k < count; k += workers) {
        fn(k);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

FovBoundary sweep(const DenseMatrix& m, std::size_t n_angles, std::string label) {
  if (!m.is_square()) {
    throw DimensionError("fov boundary: matrix not square");
  }
  if (n_angles < 4) {
    throw DimensionError("fov boundary: need at least 4 angles");
  }
  if (n_angles % 2 != 0) {
    ++n_angles;  // keep pi on the grid
  }
  FovBoundary fb;
  fb.matrix_label = std::move(label);
  fb.angles.resize(n_angles);
  fb.support.resize(n_angles);
  fb.points.resize(n_angles);

  parallel_for(n_angles, [&](std::size_t k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_angles);
    fb.angles[k] = theta;
    const ExtremeEigenPair top =
        hermitian_extreme(rotated_hermitian_part(m, theta), true);
    fb.support[k] = top.value;
    const Vector mv = matvec(m, top.vector);
    fb.points[k] = dot(top.vector, mv) / dot(top.vector, top.vector);
  });

  fb.mu = hermitian_eigenvalues(m.hermitian_part()).front();

  // numerical radius: grid max plus one golden-section pass around it
  std::size_t k_best = 0;
  for (std::size_t k = 1; k < n_angles; ++k) {
    if (fb.support[k] > fb.support[k_best]) {
      k_best = k;
    }
  }
  const double step = 2.0 * kPi / static_cast<double>(n_angles);
  double lo = fb.angles[k_best] - step;
  double hi = fb.angles[k_best] + step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = support_value(m, x1);
  double f2 = support_value(m, x2);
  for (int it = 0; it < 40 && (hi - lo) > 1e-10; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = support_value(m, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = support_value(m, x1);
    }
  }
  fb.radius = std::max({fb.support[k_best], f1, f2});
  return fb;
}

}  // namespace

bool FovBoundary::contains(Complex z, double tol) const {
  for (std::size_t k = 0; k < angles.size(); ++k) {
    if ((std::polar(1.0, angles[k]) * z).real() > support[k] + tol) {
      return false;
    }
  }
  return true;
}

FovBoundary boundary(const DenseMatrix& a, std::size_t n_angles, const std::string& label) {
  return sweep(a, n_angles, label);
}

FovBoundary boundary(const DenseMatrix& a, const GramInnerProduct& ip,
                     std::size_t n_angles, const std::string& label) {
  return sweep(ip.transform(a), n_angles, label);
}

double mu(const DenseMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("mu: matrix not square");
  }
  return hermitian_eigenvalues(a.hermitian_part()).front();
}

double mu(const DenseMatrix& a, const GramInnerProduct& ip) {
  return mu(ip.transform(a));
}

DiskSegment disk_segment(const DenseMatrix& a) {
  return DiskSegment{mu(a), spectral_norm(a)};
}

DiskSegment disk_segment(const DenseMatrix& a, const GramInnerProduct& ip) {
  const DenseMatrix ag = ip.transform(a);
  return DiskSegment{mu(ag), spectral_norm(ag)};
}

OmegaSet omega_set(const DenseMatrix& a, std::size_t n_angles) {
  if (!a.is_square()) {
    throw DimensionError("omega_set: matrix not square");
  }
  const double anorm = spectral_norm(a);
  const SchurDecomposition dec = schur(a);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (std::abs(dec.t(i, i)) <= 1e-12 * anorm) {
      throw SpectrumError("omega_set: matrix is numerically singular", dec.t(i, i));
    }
  }
  const DenseMatrix tinv = solve_triangular(
      dec.t, DenseMatrix::identity(a.rows()), Uplo::Upper, Side::Left, Transpose::None);
  const DenseMatrix ainv = dec.q * tinv * dec.q.adjoint();

  const FovBoundary fb = sweep(a, n_angles, "omega");
  const FovBoundary fb_inv = sweep(ainv, n_angles, "omega-inv");
  const double rc = 1.0 / fb_inv.radius;
  const double tol = 1e-9 * std::max(1.0, fb.radius);

  const std::size_t n = fb.points.size();
  std::vector<bool> kept(n);
  bool any_removed = false;
  for (std::size_t i = 0; i < n; ++i) {
    kept[i] = std::abs(fb.points[i]) >= rc * (1.0 - 1e-12);
    any_removed = any_removed || !kept[i];
  }

  OmegaSet out;
  out.cut_radius = rc;
  if (!any_removed) {
    out.boundary_points = fb.points;
    return out;
  }

  // Candidate points of the cut circle that lie inside W(A).
  std::vector<double> arc_angles;
  for (std::size_t j = 0; j < n; ++j) {
    const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    if (fb.contains(std::polar(rc, phi), tol)) {
      arc_angles.push_back(phi);
    }
  }

  auto circ_delta = [](double from, double to) {
    double d = std::fmod(to - from, 2.0 * kPi);
    if (d < 0.0) {
      d += 2.0 * kPi;
    }
    return d;  // in [0, 2 pi)
  };

  // Walk the boundary; each maximal removed run is replaced by the arc
  // points falling in the angular gap between its neighbouring kept points.
  out.boundary_points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) {
      out.boundary_points.push_back(fb.points[i]);
      continue;
    }
    // only handle a run at its first index
    if (kept[(i + n - 1) % n]) {
      std::size_t j = i;
      while (!kept[j % n]) {
        ++j;
      }
      const Complex z_prev = fb.points[(i + n - 1) % n];
      const Complex z_next = fb.points[j % n];
      const double phi_prev = std::arg(z_prev);
      const double gap = circ_delta(phi_prev, std::arg(z_next));
      std::vector<double> in_gap;
      for (double phi : arc_angles) {
        const double d = circ_delta(phi_prev, phi);
        if (d > 0.0 && d < gap) {
          in_gap.push_back(d);
        }
      }
      std::sort(in_gap.begin(), in_gap.end());
      for (double d : in_gap) {
        out.boundary_points.push_back(std::polar(rc, phi_prev + d));
      }
    }
  }
  return out;
}

std::vector<Complex> power_fov(const DenseMatrix& a, std::size_t n_angles) {
  const DenseMatrix s = principal_sqrt(a);
  const FovBoundary fb = sweep(s, n_angles, "sqrt");
  std::vector<Complex> out(fb.points.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = fb.points[i] * fb.points[i];
  }
  return out;
}

}  // namespace lyap
