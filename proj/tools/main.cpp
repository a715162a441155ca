// Copyright (c) the lyapnorm authors
// SPDX-License-Identifier: Apache-2.0
//
// lyapnorm: Lyapunov-based inner products, numerical ranges and GMRES
// convergence bounds for dense matrices with right-half-plane spectra.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lyap/commands.hpp"

namespace {

void add_common_options(CLI::App* sub, lyap::AnalysisConfig& cfg, std::string& c_arg) {
  sub->add_option("--matrix", cfg.matrix_spec,
                  "matrix spec: jordan:n=..,alpha=.. | integration:n=..,gamma=.. | "
                  "string:N=.. | kkt:M=..,N=..,eta=..,seed=.. | file:<path>")
      ->required();
  sub->add_option("--c", c_arg,
                  "inner-product construction: auto | none | identity | hermitian-part | "
                  "diagonalization | file:<path> (default auto: the problem's explicit G "
                  "when it has one, else identity)");
  sub->add_option("--shift", cfg.shift, "shift s >= 0 for the shifted iteration");
  sub->add_option("--m", cfg.iterations, "number of inverse-iteration steps");
  sub->add_option("--angles", cfg.n_angles, "boundary sweep resolution (default 1024)");
  sub->add_option("--rotate", cfg.rotate,
                  "rotation angle theta: analysis runs on e^{i theta} A");
  sub->add_option("--seed", cfg.seed, "PRNG seed (SplitMix64)");
  sub->add_option("--trials", cfg.trials, "number of GMRES right-hand sides");
  sub->add_option("--out", cfg.output_dir, "output directory (default .)");
  sub->add_flag("--json", cfg.json_output, "print the summary as JSON");
}

bool apply_c_choice(const std::string& c_arg, lyap::AnalysisConfig& cfg) {
  if (c_arg.empty() || c_arg == "auto") {
    cfg.c_choice = lyap::CChoice::Auto;
  } else if (c_arg == "none") {
    cfg.c_choice = lyap::CChoice::None;
  } else if (c_arg == "identity") {
    cfg.c_choice = lyap::CChoice::Identity;
  } else if (c_arg == "hermitian-part") {
    cfg.c_choice = lyap::CChoice::HermitianPart;
  } else if (c_arg == "diagonalization") {
    cfg.c_choice = lyap::CChoice::Diagonalization;
  } else if (c_arg.rfind("file:", 0) == 0) {
    cfg.c_choice = lyap::CChoice::File;
    cfg.c_file = c_arg.substr(5);
  } else {
    std::cerr << "error: unknown --c choice '" << c_arg << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyapunov inner products, numerical ranges and GMRES bounds"};
  app.require_subcommand(1);

  lyap::AnalysisConfig cfg;
  std::string c_arg;
  std::string target;

  CLI::App* analyze = app.add_subcommand("analyze", "numerical-range and bound summary");
  add_common_options(analyze, cfg, c_arg);
  CLI::App* gmres_cmd = app.add_subcommand("gmres", "GMRES trials with bound validation");
  add_common_options(gmres_cmd, cfg, c_arg);
  CLI::App* iterate = app.add_subcommand("iterate", "inverse-iteration table over m");
  add_common_options(iterate, cfg, c_arg);
  CLI::App* fov_cmd = app.add_subcommand("fov", "boundary export only");
  add_common_options(fov_cmd, cfg, c_arg);
  CLI::App* reproduce = app.add_subcommand("reproduce", "regenerate a reference target");
  reproduce->add_option("target", target, "fig2|fig3|fig4|fig5|fig6|table1|fig7")
      ->required();
  reproduce->add_option("--angles", cfg.n_angles, "boundary sweep resolution");
  reproduce->add_option("--seed", cfg.seed, "PRNG seed for GMRES trials");
  reproduce->add_option("--trials", cfg.trials, "number of GMRES right-hand sides");
  reproduce->add_option("--out", cfg.output_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lyap::kExitConfig;
  }

  if (!apply_c_choice(c_arg, cfg)) {
    return lyap::kExitConfig;
  }

  if (analyze->parsed()) {
    return lyap::cmd_analyze(cfg);
  }
  if (gmres_cmd->parsed()) {
    return lyap::cmd_gmres(cfg);
  }
  if (iterate->parsed()) {
    return lyap::cmd_iterate(cfg);
  }
  if (fov_cmd->parsed()) {
    return lyap::cmd_fov(cfg);
  }
  if (reproduce->parsed()) {
    return lyap::cmd_reproduce(target, cfg);
  }
  return lyap::kExitConfig;
}
