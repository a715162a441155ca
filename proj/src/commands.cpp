// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#include "lyap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>

#include "json.hpp"

#include "lyap/eigen.hpp"
#include "lyap/factor.hpp"
#include "lyap/lyapunov.hpp"
#include "lyap/matrix_market.hpp"
#include "lyap/reference_values.hpp"

namespace lyap {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

double parse_real(const std::string& value, const std::string& token) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) {
      throw Error("");
    }
    return v;
  } catch (...) {
    throw Error("matrix spec: cannot parse '" + token + "' as a real number");
  }
}

std::size_t parse_count(const std::string& value, const std::string& token) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size() || v < 0) {
      throw Error("");
    }
    return static_cast<std::size_t>(v);
  } catch (...) {
    throw Error("matrix spec: cannot parse '" + token + "' as a count");
  }
}

std::map<std::string, std::string> parse_kv(const std::string& body,
                                            const std::string& family) {
  std::map<std::string, std::string> kv;
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string::npos) {
      end = body.size();
    }
    const std::string token = body.substr(start, end - start);
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
      throw Error("matrix spec: malformed parameter '" + token + "' for family '" +
                  family + "'");
    }
    const std::string key = token.substr(0, eq);
    if (kv.count(key) != 0) {
      throw Error("matrix spec: duplicate parameter '" + key + "'");
    }
    kv[key] = token.substr(eq + 1);
    start = end + 1;
  }
  return kv;
}

void require_keys(const std::map<std::string, std::string>& kv,
                  std::initializer_list<const char*> keys, const std::string& family) {
  for (const char* key : keys) {
    if (kv.count(key) == 0) {
      throw Error("matrix spec: family '" + family + "' is missing parameter '" +
                  std::string(key) + "'");
    }
  }
  for (const auto& [key, value] : kv) {
    (void)value;
    if (std::find_if(keys.begin(), keys.end(),
                     [&key](const char* k) { return key == k; }) == keys.end()) {
      throw Error("matrix spec: unknown parameter '" + key + "' for family '" + family +
                  "'");
    }
  }
}

fs::path out_path(const AnalysisConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output_dir);
  return fs::path(cfg.output_dir) / name;
}

void write_json(const json& j, const fs::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

json summary_to_json(const AnalysisSummary& summary) {
  json j;
  j["mu_euclid"] = summary.mu_euclid;
  j["norm2"] = summary.norm2;
  auto put = [&j](const char* key, const std::optional<double>& v) {
    if (v) {
      j[key] = *v;
    }
  };
  put("mu_g", summary.mu_g);
  put("norm_g", summary.norm_g);
  put("sqrt_kappa2", summary.sqrt_kappa2);
  put("rho_e", summary.rho_e);
  put("rho_beta", summary.rho_beta);
  put("rho_g", summary.rho_g);
  j["warnings"] = summary.warnings;
  return j;
}

void print_summary(const AnalysisSummary& summary, bool as_json) {
  if (as_json) {
    std::cout << summary_to_json(summary).dump(2) << '\n';
    return;
  }
  std::cout << "mu_euclid   = " << format_g17(summary.mu_euclid) << '\n';
  std::cout << "norm2       = " << format_g17(summary.norm2) << '\n';
  auto line = [](const char* key, const std::optional<double>& v) {
    if (v) {
      std::cout << key << format_g17(*v) << '\n';
    }
  };
  line("mu_g        = ", summary.mu_g);
  line("norm_g      = ", summary.norm_g);
  line("sqrt_kappa2 = ", summary.sqrt_kappa2);
  line("rho_e       = ", summary.rho_e);
  line("rho_beta    = ", summary.rho_beta);
  line("rho_g       = ", summary.rho_g);
  for (const auto& w : summary.warnings) {
    std::cout << "warning: " << w << '\n';
  }
}

struct Prepared {
  GalleryProblem prob;
  DenseMatrix a_eff;
  PreparedProduct product;
};

Prepared prepare(const AnalysisConfig& cfg, bool build_product = true) {
  cfg.validate();
  Prepared prep;
  prep.prob = parse_matrix_spec(cfg.matrix_spec);
  prep.a_eff = effective_matrix(prep.prob, cfg.rotate);
  // spectrum gate: everything downstream assumes the open right half-plane
  Complex leftmost(std::numeric_limits<double>::infinity(), 0.0);
  for (const Complex& lam : eigenvalues(prep.a_eff)) {
    if (lam.real() < leftmost.real()) {
      leftmost = lam;
    }
  }
  if (!(leftmost.real() > 0.0)) {
    throw SpectrumError("spectrum not in the open right half-plane after rotation",
                        leftmost);
  }
  if (build_product) {
    prep.product = build_inner_product(prep.a_eff, prep.prob, cfg);
  }
  return prep;
}

// Starting C (= G_0) for the iterate command; Auto means Identity here.
DenseMatrix starting_c(const DenseMatrix& a_eff, const AnalysisConfig& cfg) {
  switch (cfg.c_choice) {
    case CChoice::Auto:
    case CChoice::Identity:
      return DenseMatrix::identity(a_eff.rows());
    case CChoice::HermitianPart:
      return a_eff + a_eff.adjoint();
    case CChoice::Diagonalization:
      return diagonalization_rhs(a_eff);
    case CChoice::File:
      return read_matrix_market(cfg.c_file);
    case CChoice::None:
      throw Error("config: --c none is not valid for iterate");
  }
  throw Error("config: unknown c choice");
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SpectrumError& e) {
    std::cerr << "error: " << e.what() << " (eigenvalue " << format_g17(e.eigenvalue.real())
              << (e.eigenvalue.imag() < 0 ? " - " : " + ")
              << format_g17(std::abs(e.eigenvalue.imag())) << "i)\n";
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NotPositiveDefiniteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

struct Check {
  std::string name;
  double expected;
  double actual;
  double tol;
  bool pass;
};

json checks_to_json(const std::string& target, const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"tol", c.tol},
                   {"pass", c.pass}});
  }
  return json{{"target", target}, {"checks", arr}};
}

Check rel_check(const std::string& name, double expected, double actual, double tol) {
  const bool pass = std::abs(actual - expected) <= tol * std::abs(expected);
  return Check{name, expected, actual, tol, pass};
}

Check abs_check(const std::string& name, double expected, double actual, double tol) {
  const bool pass = std::abs(actual - expected) <= tol;
  return Check{name, expected, actual, tol, pass};
}

Check le_check(const std::string& name, double actual, double limit) {
  return Check{name, limit, actual, limit, actual <= limit};
}

Check range_check(const std::string& name, double lo, double hi, double actual) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  return Check{name, mid, actual, half, actual >= lo && actual <= hi};
}

int finish_report(const std::string& target, const std::vector<Check>& checks,
                  const AnalysisConfig& cfg) {
  write_json(checks_to_json(target, checks), out_path(cfg, "report.json"));
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    std::cout << target << ": " << c.name << ": " << (c.pass ? "pass" : "FAIL")
              << " (expected " << format_g17(c.expected) << ", actual "
              << format_g17(c.actual) << ", tol " << format_g17(c.tol) << ")\n";
  }
  return all_pass ? kExitOk : kExitTolerance;
}

// data shared by the fig5/fig6/table1 targets
struct FamilyQuantities {
  std::vector<double> sqrt_kappa;
  std::vector<double> mu_g;
  std::vector<double> norm_g;
  std::vector<GramInnerProduct> products;
};

FamilyQuantities family_quantities(const DenseMatrix& a, std::size_t steps, double shift) {
  FamilyQuantities fq;
  const IterationFamily family =
      inverse_iteration(a, DenseMatrix::identity(a.rows()), steps, shift);
  for (const auto& member : family.members) {
    fq.sqrt_kappa.push_back(member.ip.sqrt_kappa2());
    const DenseMatrix ag = member.ip.transform(a);
    fq.mu_g.push_back(mu(ag));
    fq.norm_g.push_back(spectral_norm(ag));
    fq.products.push_back(member.ip);
  }
  return fq;
}

int reproduce_iteration_table(const std::string& target, const AnalysisConfig& cfg,
                              double shift, const double* kappa_ref, const double* mu_ref,
                              const double* norm_ref) {
  const DenseMatrix a = integration_matrix(100, 2.0);
  const FamilyQuantities fq = family_quantities(a, 5, shift);
  std::vector<Check> checks;
  for (std::size_t m = 0; m < 5; ++m) {
    const std::string suffix = "_m" + std::to_string(m + 1);
    checks.push_back(rel_check("sqrt_kappa2" + suffix, kappa_ref[m], fq.sqrt_kappa[m],
                               reference::kIterTableRelTol));
    checks.push_back(
        rel_check("mu_g" + suffix, mu_ref[m], fq.mu_g[m], reference::kIterTableRelTol));
    checks.push_back(rel_check("norm_g" + suffix, norm_ref[m], fq.norm_g[m],
                               reference::kIterTableRelTol));
  }
  // emit the table itself
  std::vector<IterateRow> rows(5);
  for (std::size_t m = 0; m < 5; ++m) {
    rows[m].m = m + 1;
    rows[m].sqrt_kappa2 = fq.sqrt_kappa[m];
    rows[m].mu_g = fq.mu_g[m];
    rows[m].norm_g = fq.norm_g[m];
    rows[m].rho_e = elman(fq.mu_g[m], fq.norm_g[m], 1.0, 0).rate;
    rows[m].rho_beta = beckermann(fq.mu_g[m], fq.norm_g[m], 1.0, 0).rate;
    const FovBoundary fb = boundary(fq.products[m].transform(a), cfg.n_angles);
    rows[m].rho_g = circle_rate(fb).rate;
  }
  write_iterate_csv(rows, out_path(cfg, target + ".csv").string());
  return finish_report(target, checks, cfg);
}

int reproduce_table1(const AnalysisConfig& cfg) {
  const DenseMatrix a = integration_matrix(100, 2.0);
  std::vector<Check> checks;
  double rho_e[4];
  double rho_beta[4];
  double rho_g[4];
  const char* col_names[4] = {"inv_m1", "inv_m5", "shift_m1", "shift_m5"};
  std::size_t col = 0;
  for (const double shift : {0.0, 0.5}) {
    const FamilyQuantities fq = family_quantities(a, 5, shift);
    for (const std::size_t m : {std::size_t{1}, std::size_t{5}}) {
      const std::size_t i = m - 1;
      rho_e[col] = elman(fq.mu_g[i], fq.norm_g[i], 1.0, 0).rate;
      rho_beta[col] = beckermann(fq.mu_g[i], fq.norm_g[i], 1.0, 0).rate;
      const FovBoundary fb =
          boundary(fq.products[i].transform(a), reference::kTable1Angles);
      rho_g[col] = circle_rate(fb).rate;
      checks.push_back(abs_check(std::string("rho_e_") + col_names[col],
                                 reference::kTable1RhoE[col], rho_e[col],
                                 reference::kRhoDiskAbsTol));
      checks.push_back(abs_check(std::string("rho_beta_") + col_names[col],
                                 reference::kTable1RhoBeta[col], rho_beta[col],
                                 reference::kRhoDiskAbsTol));
      checks.push_back(abs_check(std::string("rho_g_") + col_names[col],
                                 reference::kTable1RhoG[col], rho_g[col],
                                 reference::kRhoCircleAbsTol));
      ++col;
    }
  }
  {
    std::ofstream out(out_path(cfg, "table1.csv"));
    out << "rate,inv_m1,inv_m5,shift_m1,shift_m5\n";
    out << "rho_e";
    for (double v : rho_e) {
      out << ',' << format_g17(v);
    }
    out << "\nrho_beta";
    for (double v : rho_beta) {
      out << ',' << format_g17(v);
    }
    out << "\nrho_g";
    for (double v : rho_g) {
      out << ',' << format_g17(v);
    }
    out << '\n';
  }
  return finish_report("table1", checks, cfg);
}

int reproduce_fig2(const AnalysisConfig& cfg) {
  const GalleryProblem prob = damped_string(64);
  const DenseMatrix a_eff = prob.analysis_matrix();
  const GramInnerProduct ip = GramInnerProduct::make(*prob.g_explicit);
  std::vector<Check> checks;
  checks.push_back(rel_check("sqrt_kappa2", reference::kFig2SqrtKappa, ip.sqrt_kappa2(),
                             reference::kFig2RelTol));
  checks.push_back(le_check("lyapunov_residual", prob.lyapunov_residual(),
                            reference::kFig2LyapResidTol));
  // -a must appear (numerically) twice on the Schur diagonal of A
  const double a_opt = prob.parameters.at("a");
  std::vector<double> dist;
  for (const Complex& lam : eigenvalues(prob.a)) {
    dist.push_back(std::abs(lam + a_opt));
  }
  std::sort(dist.begin(), dist.end());
  checks.push_back(le_check("double_eigenvalue_first", dist[0],
                            reference::kFig2DoubleEigTol));
  checks.push_back(le_check("double_eigenvalue_second", dist[1],
                            reference::kFig2DoubleEigTol));

  write_fov_csv(boundary(prob.a, cfg.n_angles, "euclid"),
                out_path(cfg, "fov_euclid.csv").string());
  write_fov_csv(boundary(a_eff, ip, cfg.n_angles, "gram"),
                out_path(cfg, "fov_g.csv").string());
  return finish_report("fig2", checks, cfg);
}

int reproduce_fig3(const AnalysisConfig& cfg) {
  const DenseMatrix a = jordan_matrix(100, 1.1);
  const LyapunovSolution sol = solve(a, DenseMatrix::identity(100));
  const GramInnerProduct ip = GramInnerProduct::make(sol.g);
  const double mug = mu(a, ip);
  std::vector<Check> checks;
  checks.push_back(rel_check("sqrt_kappa2", reference::kFig3SqrtKappa, ip.sqrt_kappa2(),
                             reference::kFig3SqrtKappaRelTol));
  const bool mu_ok = mug > 0.0 && mug <= reference::kFig3MuG * reference::kFig3MuGFactor &&
                     mug >= reference::kFig3MuG / reference::kFig3MuGFactor;
  checks.push_back(Check{"mu_g_within_factor_10", reference::kFig3MuG, mug,
                         reference::kFig3MuGFactor, mu_ok});

  const std::vector<GmresTrace> traces = trial_ensemble(a, cfg.trials, cfg.seed, 100);
  std::vector<double> at50;
  for (const auto& trace : traces) {
    at50.push_back(trace.rel_residuals[std::min<std::size_t>(50, trace.iterations)]);
  }
  std::sort(at50.begin(), at50.end());
  const double median = at50[at50.size() / 2];
  checks.push_back(Check{"median_residual_at_k50_above_0.1", 0.1, median, 0.0,
                         median > 0.1});

  write_fov_csv(boundary(a, cfg.n_angles, "euclid"), out_path(cfg, "fov_euclid.csv").string());
  write_fov_csv(boundary(a, ip, cfg.n_angles, "gram"), out_path(cfg, "fov_g.csv").string());
  write_traces_csv(traces, out_path(cfg, "traces.csv").string());
  return finish_report("fig3", checks, cfg);
}

int reproduce_fig4(const AnalysisConfig& cfg) {
  const DenseMatrix a = integration_matrix(100, 2.0);
  const LyapunovSolution sol = solve(a, DenseMatrix::identity(100));
  const GramInnerProduct ip = GramInnerProduct::make(sol.g);
  const double mug = mu(a, ip);
  std::vector<Check> checks;
  checks.push_back(range_check("mu_g", reference::kFig4MuLo, reference::kFig4MuHi, mug));
  checks.push_back(range_check("sqrt_kappa2", reference::kFig4SqrtKappaLo,
                               reference::kFig4SqrtKappaHi, ip.sqrt_kappa2()));

  const std::vector<GmresTrace> traces = trial_ensemble(a, cfg.trials, cfg.seed, 100);
  double worst_at40 = 0.0;
  for (const auto& trace : traces) {
    worst_at40 = std::max(
        worst_at40, trace.rel_residuals[std::min<std::size_t>(40, trace.iterations)]);
  }
  checks.push_back(le_check("all_trials_below_1e-10_by_k40", worst_at40, 1e-10));

  write_fov_csv(boundary(a, cfg.n_angles, "euclid"), out_path(cfg, "fov_euclid.csv").string());
  write_fov_csv(boundary(a, ip, cfg.n_angles, "gram"), out_path(cfg, "fov_g.csv").string());
  write_traces_csv(traces, out_path(cfg, "traces.csv").string());
  return finish_report("fig4", checks, cfg);
}

int reproduce_fig7(const AnalysisConfig& cfg) {
  const DenseMatrix a = integration_matrix(100, 2.0);
  const OmegaSet omega = omega_set(a, cfg.n_angles);
  const std::vector<Complex> power = power_fov(a, cfg.n_angles);
  std::vector<Check> checks;
  double min_re = std::numeric_limits<double>::infinity();
  for (const Complex& z : power) {
    min_re = std::min(min_re, z.real());
  }
  checks.push_back(Check{"power_fov_min_re_positive", 0.0, min_re, 0.0, min_re > 0.0});
  double min_abs = std::numeric_limits<double>::infinity();
  for (const Complex& z : omega.boundary_points) {
    min_abs = std::min(min_abs, std::abs(z));
  }
  checks.push_back(Check{"omega_min_abs_above_cut", omega.cut_radius, min_abs, 1e-9,
                         min_abs >= omega.cut_radius - 1e-9});

  write_points_csv(omega.boundary_points, out_path(cfg, "omega.csv").string());
  write_points_csv(power, out_path(cfg, "power_fov.csv").string());
  write_fov_csv(boundary(a, cfg.n_angles, "euclid"), out_path(cfg, "fov_euclid.csv").string());
  return finish_report("fig7", checks, cfg);
}

}  // namespace

GalleryProblem parse_matrix_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  if (family == "file") {
    if (colon == std::string::npos || colon + 1 == spec.size()) {
      throw Error("matrix spec: 'file' requires a path, got '" + spec + "'");
    }
    GalleryProblem prob;
    prob.a = read_matrix_market(spec.substr(colon + 1));
    if (!prob.a.is_square()) {
      throw Error("matrix spec: file matrix is not square");
    }
    prob.label = spec;
    return prob;
  }
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto kv = parse_kv(body, family);
  if (family == "jordan") {
    require_keys(kv, {"n", "alpha"}, family);
    GalleryProblem prob;
    prob.a = jordan_matrix(parse_count(kv.at("n"), "n=" + kv.at("n")),
                           parse_real(kv.at("alpha"), "alpha=" + kv.at("alpha")));
    prob.label = spec;
    prob.parameters["n"] = static_cast<double>(prob.a.rows());
    return prob;
  }
  if (family == "integration") {
    require_keys(kv, {"n", "gamma"}, family);
    GalleryProblem prob;
    prob.a = integration_matrix(parse_count(kv.at("n"), "n=" + kv.at("n")),
                                parse_real(kv.at("gamma"), "gamma=" + kv.at("gamma")));
    prob.label = spec;
    prob.parameters["n"] = static_cast<double>(prob.a.rows());
    return prob;
  }
  if (family == "string") {
    require_keys(kv, {"N"}, family);
    return damped_string(parse_count(kv.at("N"), "N=" + kv.at("N")));
  }
  if (family == "kkt") {
    require_keys(kv, {"M", "N", "eta", "seed"}, family);
    std::optional<double> eta;
    if (kv.at("eta") != "auto") {
      eta = parse_real(kv.at("eta"), "eta=" + kv.at("eta"));
    }
    return kkt_matrix(parse_count(kv.at("M"), "M=" + kv.at("M")),
                      parse_count(kv.at("N"), "N=" + kv.at("N")), eta,
                      parse_count(kv.at("seed"), "seed=" + kv.at("seed")));
  }
  throw Error("matrix spec: unknown family '" + family + "'");
}

int cmd_analyze(const AnalysisConfig& cfg) {
  return guarded([&]() {
    Prepared prep = prepare(cfg);
    AnalysisResult res =
        run_analysis(prep.a_eff, prep.product.ip, cfg.n_angles, prep.a_eff.rows());
    res.summary.warnings.insert(res.summary.warnings.begin(),
                                prep.product.warnings.begin(),
                                prep.product.warnings.end());
    write_fov_csv(res.fov_euclid, out_path(cfg, "fov_euclid.csv").string());
    if (res.fov_g) {
      write_fov_csv(*res.fov_g, out_path(cfg, "fov_g.csv").string());
    }
    write_bounds_csv(res.curves, out_path(cfg, "bounds.csv").string());
    write_json(summary_to_json(res.summary), out_path(cfg, "summary.json"));
    print_summary(res.summary, cfg.json_output);
    return kExitOk;
  });
}

int cmd_gmres(const AnalysisConfig& cfg) {
  return guarded([&]() {
    Prepared prep = prepare(cfg);
    const std::size_t max_iter = std::min<std::size_t>(prep.a_eff.rows(), 200);
    AnalysisResult res = run_analysis(prep.a_eff, prep.product.ip, cfg.n_angles, max_iter);
    const std::vector<GmresTrace> traces =
        trial_ensemble(prep.a_eff, cfg.trials, cfg.seed, max_iter);
    write_traces_csv(traces, out_path(cfg, "traces.csv").string());

    json report;
    bool violated = false;
    for (const BoundCurve& curve : res.curves) {
      double max_ratio = 0.0;
      for (const GmresTrace& trace : traces) {
        max_ratio = std::max(max_ratio, validate(trace, curve).max_ratio);
      }
      const bool pass = max_ratio <= 1.0 + 1e-8;
      violated = violated || !pass;
      report[to_string(curve.kind)] = {{"max_ratio", max_ratio}, {"pass", pass}};
    }
    report["all_pass"] = !violated;
    write_json(report, out_path(cfg, "validate.json"));
    if (cfg.json_output) {
      std::cout << report.dump(2) << '\n';
    }
    return violated ? kExitNumerical : kExitOk;
  });
}

int cmd_iterate(const AnalysisConfig& cfg) {
  return guarded([&]() {
    if (cfg.iterations < 1) {
      throw Error("config: iterate requires --m >= 1");
    }
    Prepared prep = prepare(cfg, /*build_product=*/false);
    const DenseMatrix g0 = starting_c(prep.a_eff, cfg);
    std::vector<FovBoundary> boundaries;
    const std::vector<IterateRow> rows =
        iterate_table(prep.a_eff, g0, cfg.iterations, cfg.shift, cfg.n_angles, &boundaries);
    write_iterate_csv(rows, out_path(cfg, "iterate.csv").string());
    for (std::size_t i = 0; i < boundaries.size(); ++i) {
      write_fov_csv(boundaries[i],
                    out_path(cfg, "fov_m" + std::to_string(i + 1) + ".csv").string());
    }
    if (cfg.json_output) {
      json arr = json::array();
      for (const auto& row : rows) {
        arr.push_back({{"m", row.m},
                       {"sqrt_kappa2", row.sqrt_kappa2},
                       {"mu_g", row.mu_g},
                       {"norm_g", row.norm_g},
                       {"rho_e", row.rho_e},
                       {"rho_beta", row.rho_beta},
                       {"rho_g", row.rho_g}});
      }
      std::cout << arr.dump(2) << '\n';
    } else {
      std::cout << "m,sqrt_kappa2,mu_g,norm_g,rho_e,rho_beta,rho_g\n";
      for (const auto& row : rows) {
        std::cout << row.m << ',' << format_g17(row.sqrt_kappa2) << ','
                  << format_g17(row.mu_g) << ',' << format_g17(row.norm_g) << ','
                  << format_g17(row.rho_e) << ',' << format_g17(row.rho_beta) << ','
                  << format_g17(row.rho_g) << '\n';
      }
    }
    return kExitOk;
  });
}

int cmd_fov(const AnalysisConfig& cfg) {
  return guarded([&]() {
    Prepared prep = prepare(cfg);
    write_fov_csv(boundary(prep.a_eff, cfg.n_angles, "euclid"),
                  out_path(cfg, "fov_euclid.csv").string());
    if (prep.product.ip) {
      write_fov_csv(boundary(prep.a_eff, *prep.product.ip, cfg.n_angles, "gram"),
                    out_path(cfg, "fov_g.csv").string());
    }
    return kExitOk;
  });
}

int cmd_reproduce(const std::string& target, const AnalysisConfig& cfg) {
  return guarded([&]() -> int {
    if (target == "fig2") {
      return reproduce_fig2(cfg);
    }
    if (target == "fig3") {
      return reproduce_fig3(cfg);
    }
    if (target == "fig4") {
      return reproduce_fig4(cfg);
    }
    if (target == "fig5") {
      return reproduce_iteration_table("fig5", cfg, 0.0, reference::kFig5SqrtKappa,
                                       reference::kFig5Mu, reference::kFig5Norm);
    }
    if (target == "fig6") {
      return reproduce_iteration_table("fig6", cfg, 0.5, reference::kFig6SqrtKappa,
                                       reference::kFig6Mu, reference::kFig6Norm);
    }
    if (target == "table1") {
      return reproduce_table1(cfg);
    }
    if (target == "fig7") {
      return reproduce_fig7(cfg);
    }
    throw Error("reproduce: unknown target '" + target +
                "' (expected fig2|fig3|fig4|fig5|fig6|table1|fig7)");
  });
}

}  // namespace lyap
