// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_ANALYSIS_HPP
#define LYAP_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lyap/bounds.hpp"
#include "lyap/fov.hpp"
#include "lyap/gallery.hpp"
#include "lyap/gram.hpp"
#include "lyap/gmres.hpp"
#include "lyap/matrix.hpp"

namespace lyap {

/// How the Lyapunov right-hand side C (equivalently the starting G_0 of the
/// iteration) is chosen.  Auto takes the problem's explicit G when it has
/// one and falls back to Identity otherwise; None runs a Euclidean-only
/// analysis.
enum class CChoice { Auto, None, Identity, HermitianPart, Diagonalization, File };

struct AnalysisConfig {
  std::string matrix_spec;
  CChoice c_choice = CChoice::Auto;
  std::string c_file;
  double shift = 0.0;
  std::size_t iterations = 1;
  std::size_t n_angles = 1024;
  double rotate = 0.0;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string output_dir = ".";
  bool json_output = false;

  /// Throws Error on violated invariants (shift < 0, n_angles < 4, ...).
  void validate() const;
};

/// e^{i theta} A with theta from --rotate, or the exact negation for
/// problems tagged left-half-plane when no explicit rotation is given.
DenseMatrix effective_matrix(const GalleryProblem& prob, double rotate_theta);

struct PreparedProduct {
  std::optional<GramInnerProduct> ip;
  std::vector<std::string> warnings;
};

/// Builds the inner product for a_eff per the config's c_choice, shift and
/// iteration count.  Returns no product for CChoice::None.
PreparedProduct build_inner_product(const DenseMatrix& a_eff, const GalleryProblem& prob,
                                    const AnalysisConfig& cfg);

struct AnalysisSummary {
  double mu_euclid = 0.0;
  double norm2 = 0.0;
  std::optional<double> mu_g;
  std::optional<double> norm_g;
  std::optional<double> sqrt_kappa2;
  std::optional<double> rho_e;
  std::optional<double> rho_beta;
  std::optional<double> rho_g;
  std::vector<std::string> warnings;
};

struct AnalysisResult {
  AnalysisSummary summary;
  FovBoundary fov_euclid;
  std::optional<FovBoundary> fov_g;
  std::vector<BoundCurve> curves;
};

/// Full numerical-range / bound analysis of a_eff, in the G product when one
/// is given and in the Euclidean product otherwise.  The three rates come
/// from whichever product the curves use; when mu <= 0 there the rate fields
/// stay empty and a warning explains why.
AnalysisResult run_analysis(const DenseMatrix& a_eff,
                            const std::optional<GramInnerProduct>& ip,
                            std::size_t n_angles, std::size_t k_max);

/// One row of the inverse-iteration table.
struct IterateRow {
  std::size_t m = 0;
  double sqrt_kappa2 = 0.0;
  double mu_g = 0.0;
  double norm_g = 0.0;
  double rho_e = 0.0;
  double rho_beta = 0.0;
  double rho_g = 0.0;
};

/// Runs the (shifted) Lyapunov inverse iteration from g0 and tabulates the
/// per-member constants and rates; boundaries are swept at n_angles.  When
/// boundaries_out is non-null the per-member W_G boundaries are returned too.
std::vector<IterateRow> iterate_table(const DenseMatrix& a_eff, const DenseMatrix& g0,
                                      std::size_t steps, double shift,
                                      std::size_t n_angles,
                                      std::vector<FovBoundary>* boundaries_out = nullptr);

// ---- deterministic emission helpers (17 significant digits) ----

std::string format_g17(double v);
void write_fov_csv(const FovBoundary& fb, const std::string& path);
void write_points_csv(const std::vector<Complex>& points, const std::string& path);
void write_bounds_csv(const std::vector<BoundCurve>& curves, const std::string& path);
void write_curve_csv(const BoundCurve& curve, const std::string& path);
void write_traces_csv(const std::vector<GmresTrace>& traces, const std::string& path);
void write_iterate_csv(const std::vector<IterateRow>& rows, const std::string& path);

}  // namespace lyap

#endif  // LYAP_ANALYSIS_HPP
