// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "lyap/factor.hpp"
#include "lyap/lyapunov.hpp"
#include "lyap/matrix_market.hpp"

namespace lyap {

void AnalysisConfig::validate() const {
  if (matrix_spec.empty()) {
    throw Error("config: --matrix is required");
  }
  if (shift < 0.0) {
    throw Error("config: shift must be >= 0");
  }
  if (n_angles < 4) {
    throw Error("config: n_angles must be >= 4");
  }
  if (trials < 1) {
    throw Error("config: trials must be >= 1");
  }
  if (c_choice == CChoice::File && c_file.empty()) {
    throw Error("config: --c file requires a path");
  }
}

DenseMatrix effective_matrix(const GalleryProblem& prob, double rotate_theta) {
  if (rotate_theta != 0.0) {
    return std::polar(1.0, rotate_theta) * prob.a;
  }
  // The left-half-plane rotation theta = pi is applied as an exact negation.
  return prob.analysis_matrix();
}

PreparedProduct build_inner_product(const DenseMatrix& a_eff, const GalleryProblem& prob,
                                    const AnalysisConfig& cfg) {
  PreparedProduct out;
  if (cfg.c_choice == CChoice::None) {
    return out;
  }
  if (cfg.c_choice == CChoice::Auto && prob.g_explicit) {
    if (cfg.iterations > 1 || cfg.shift != 0.0) {
      throw Error(
          "explicit-G problems take no --m/--shift; pass --c to choose a construction");
    }
    if (prob.c_explicit) {
      const double resid = prob.lyapunov_residual();
      if (resid > 1e-10) {
        out.warnings.push_back("explicit (G, C) Lyapunov residual " + format_g17(resid) +
                               " exceeds 1e-10");
      }
    }
    out.ip = GramInnerProduct::make(*prob.g_explicit);
    return out;
  }

  DenseMatrix c0;
  switch (cfg.c_choice) {
    case CChoice::Auto:
    case CChoice::Identity:
      c0 = DenseMatrix::identity(a_eff.rows());
      break;
    case CChoice::HermitianPart:
      c0 = a_eff + a_eff.adjoint();
      break;
    case CChoice::Diagonalization:
      c0 = diagonalization_rhs(a_eff);
      break;
    case CChoice::File:
      c0 = read_matrix_market(cfg.c_file);
      break;
    case CChoice::None:
      return out;  // unreachable
  }

  const std::size_t steps = cfg.iterations == 0 ? 1 : cfg.iterations;
  IterationFamily family = inverse_iteration(a_eff, c0, steps, cfg.shift);
  const IterationFamily::Member& last = family.members.back();
  if (last.ip.factor_kind() == FactorKind::EigenSqrt) {
    out.warnings.push_back(
        "computed G required the eigendecomposition square-root fallback");
  }
  out.ip = last.ip;
  return out;
}

namespace {

void append_rates(AnalysisSummary& summary, std::vector<BoundCurve>& curves,
                  double mu_val, double norm_val, double kappa2,
                  const FovBoundary& fb, std::size_t k_max) {
  if (!(mu_val > 0.0)) {
    summary.warnings.push_back("mu <= 0: numerical range touches the origin; "
                               "Elman-type rates not applicable");
    return;
  }
  BoundCurve ce = elman(mu_val, norm_val, kappa2, k_max);
  BoundCurve cb = beckermann(mu_val, norm_val, kappa2, k_max);
  BoundCurve cc = cp_circle(fb, kappa2, k_max);
  summary.rho_e = ce.rate;
  summary.rho_beta = cb.rate;
  summary.rho_g = cc.rate;
  curves.push_back(std::move(ce));
  curves.push_back(std::move(cb));
  curves.push_back(std::move(cc));
}

}  // namespace

AnalysisResult run_analysis(const DenseMatrix& a_eff,
                            const std::optional<GramInnerProduct>& ip,
                            std::size_t n_angles, std::size_t k_max) {
  AnalysisResult res;
  res.summary.mu_euclid = mu(a_eff);
  res.summary.norm2 = spectral_norm(a_eff);
  res.fov_euclid = boundary(a_eff, n_angles, "euclid");

  if (ip) {
    const DenseMatrix ag = ip->transform(a_eff);
    res.fov_g = boundary(ag, n_angles, "gram");
    res.summary.mu_g = res.fov_g->mu;
    res.summary.norm_g = spectral_norm(ag);
    res.summary.sqrt_kappa2 = ip->sqrt_kappa2();
    if (ip->clipped()) {
      res.summary.warnings.push_back(
          "G eigenvalues clipped at eps * lambda_max (precision loss)");
    }
    append_rates(res.summary, res.curves, *res.summary.mu_g, *res.summary.norm_g,
                 ip->kappa2(), *res.fov_g, k_max);
  } else {
    append_rates(res.summary, res.curves, res.summary.mu_euclid, res.summary.norm2, 1.0,
                 res.fov_euclid, k_max);
  }
  return res;
}

std::vector<IterateRow> iterate_table(const DenseMatrix& a_eff, const DenseMatrix& g0,
                                      std::size_t steps, double shift,
                                      std::size_t n_angles,
                                      std::vector<FovBoundary>* boundaries_out) {
  const IterationFamily family = inverse_iteration(a_eff, g0, steps, shift);
  std::vector<IterateRow> rows;
  rows.reserve(family.members.size());
  for (const auto& member : family.members) {
    IterateRow row;
    row.m = member.m;
    row.sqrt_kappa2 = member.ip.sqrt_kappa2();
    const DenseMatrix ag = member.ip.transform(a_eff);
    const FovBoundary fb = boundary(ag, n_angles, "m=" + std::to_string(member.m));
    row.mu_g = fb.mu;
    row.norm_g = spectral_norm(ag);
    row.rho_e = elman(row.mu_g, row.norm_g, member.ip.kappa2(), 0).rate;
    row.rho_beta = beckermann(row.mu_g, row.norm_g, member.ip.kappa2(), 0).rate;
    row.rho_g = circle_rate(fb).rate;
    if (boundaries_out != nullptr) {
      boundaries_out->push_back(fb);
    }
    rows.push_back(row);
  }
  return rows;
}

// ---- emission ----

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path);
  }
  return out;
}

}  // namespace

void write_fov_csv(const FovBoundary& fb, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "theta,support,re_z,im_z\n";
  for (std::size_t k = 0; k < fb.angles.size(); ++k) {
    out << format_g17(fb.angles[k]) << ',' << format_g17(fb.support[k]) << ','
        << format_g17(fb.points[k].real()) << ',' << format_g17(fb.points[k].imag())
        << '\n';
  }
}

void write_points_csv(const std::vector<Complex>& points, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "re_z,im_z\n";
  for (const Complex& z : points) {
    out << format_g17(z.real()) << ',' << format_g17(z.imag()) << '\n';
  }
}

void write_bounds_csv(const std::vector<BoundCurve>& curves, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "k";
  for (const auto& curve : curves) {
    out << ',' << to_string(curve.kind);
  }
  out << '\n';
  std::size_t len = 0;
  for (const auto& curve : curves) {
    len = std::max(len, curve.values.size());
  }
  for (std::size_t k = 0; k < len; ++k) {
    out << k;
    for (const auto& curve : curves) {
      out << ',';
      if (k < curve.values.size()) {
        out << format_g17(curve.values[k]);
      }
    }
    out << '\n';
  }
}

void write_curve_csv(const BoundCurve& curve, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "k,bound_value\n";
  for (std::size_t k = 0; k < curve.values.size(); ++k) {
    out << k << ',' << format_g17(curve.values[k]) << '\n';
  }
}

void write_traces_csv(const std::vector<GmresTrace>& traces, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "trial,k,rel_residual\n";
  for (std::size_t t = 0; t < traces.size(); ++t) {
    for (std::size_t k = 0; k < traces[t].rel_residuals.size(); ++k) {
      out << t << ',' << k << ',' << format_g17(traces[t].rel_residuals[k]) << '\n';
    }
  }
}

void write_iterate_csv(const std::vector<IterateRow>& rows, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "m,sqrt_kappa2,mu_g,norm_g,rho_e,rho_beta,rho_g\n";
  for (const auto& row : rows) {
    out << row.m << ',' << format_g17(row.sqrt_kappa2) << ',' << format_g17(row.mu_g)
        << ',' << format_g17(row.norm_g) << ',' << format_g17(row.rho_e) << ','
        << format_g17(row.rho_beta) << ',' << format_g17(row.rho_g) << '\n';
  }
}

}  // namespace lyap
