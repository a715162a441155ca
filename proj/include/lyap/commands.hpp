// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAP_COMMANDS_HPP
#define LYAP_COMMANDS_HPP

#include <string>

#include "lyap/analysis.hpp"
#include "lyap/gallery.hpp"

namespace lyap {

// process exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;      // invalid config / parse error
inline constexpr int kExitNumerical = 3;   // half-plane violation, solver breakdown
inline constexpr int kExitTolerance = 4;   // reproduction tolerance exceeded

/// Parses the matrix mini-language:
///   jordan:n=100,alpha=1.1
///   integration:n=100,gamma=2
///   string:N=64
///   kkt:M=64,N=128,eta=auto,seed=7
///   file:<path>            (Matrix Market)
/// Malformed specs raise Error naming the offending token.
GalleryProblem parse_matrix_spec(const std::string& spec);

/// Numerical-range and bound summary (JSON) plus fov_euclid.csv, fov_g.csv
/// and bounds.csv in the output directory.
int cmd_analyze(const AnalysisConfig& cfg);

/// GMRES trial ensemble: traces.csv plus validate.json with the max
/// trace/bound ratio per bound kind.
int cmd_gmres(const AnalysisConfig& cfg);

/// Inverse-iteration table over m: iterate.csv plus per-member boundary CSVs.
int cmd_iterate(const AnalysisConfig& cfg);

/// Boundary export only: fov_euclid.csv (and fov_g.csv with a product).
int cmd_fov(const AnalysisConfig& cfg);

/// Reproduces an embedded reference target (fig2..fig7, table1): writes the
/// target's CSVs and report.json, exit 4 when a check misses its tolerance.
int cmd_reproduce(const std::string& target, const AnalysisConfig& cfg);

}  // namespace lyap

#endif  // LYAP_COMMANDS_HPP
