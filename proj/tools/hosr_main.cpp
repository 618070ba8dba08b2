// Copyright 2026 The hosr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hosr: generate spectra, deduce symmetry-sector counts from higher-order
// spacing ratios, and run missing-level experiments.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "hosr/errors.hpp"
#include "hosr/pipeline.hpp"

namespace {

int exit_code_for(const std::string& category) {
  static const std::map<std::string, int> codes = {
      {"config", 2}, {"parse", 3},      {"io", 4},      {"size", 5},
      {"validation", 6}, {"domain", 7}, {"numeric", 8},
  };
  const auto it = codes.find(category);
  return it == codes.end() ? 1 : it->second;
}

void add_analysis_flags(CLI::App& cmd, hosr::RunConfig& cfg) {
  cmd.add_option("--k-max", cfg.k_max, "Highest ratio order examined");
  cmd.add_option("--grid-lo", cfg.grid.lo, "Lowest beta' on the scan grid");
  cmd.add_option("--grid-hi", cfg.grid.hi, "Highest beta' on the scan grid");
  cmd.add_option("--grid-step", cfg.grid.step, "Scan grid step");
  cmd.add_option("--significance", cfg.significance,
                 "KS significance level");
  cmd.add_option("--beta-tolerance", cfg.beta_tolerance,
                 "Largest |beta_hat - k| accepted as a sector count");
}

void add_ensemble_flags(CLI::App& cmd, hosr::RunConfig& cfg) {
  cmd.add_option("--seed", cfg.seed, "RNG seed");
  cmd.add_option("--blocks", cfg.blocks, "Number of independent blocks m");
}

}  // namespace

int main(int argc, char** argv) {
  hosr::RunConfig cfg;
  CLI::App app{"Higher-order spacing ratio statistics and symmetry-sector "
               "deduction"};
  app.set_version_flag("--version", std::string(hosr::version()));
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Generate a spectrum");
  generate->require_subcommand(1);
  generate->add_option("--outdir", cfg.outdir, "Output directory");

  auto* goe = generate->add_subcommand("goe", "Superposed GOE spectra");
  add_ensemble_flags(*goe, cfg);
  goe->add_option("--dim", cfg.dim, "Levels per block");
  goe->add_flag("--tridiagonal,!--dense", cfg.tridiagonal,
                "Tridiagonal (default) or dense GOE sampler");

  auto* poisson = generate->add_subcommand("poisson", "Uncorrelated levels");
  add_ensemble_flags(*poisson, cfg);
  poisson->add_option("--n", cfg.n, "Levels per block");

  auto* spin = generate->add_subcommand("spin-chain",
                                        "XXZ chain with next-NN coupling");
  spin->add_option("--sites", cfg.sites, "Chain length L");
  spin->add_option("--eta", cfg.eta, "Next-nearest-neighbour strength");
  spin->add_option("--n-up", cfg.n_up, "Up spins (default L/2)");
  spin->add_option("--jxy", cfg.jxy, "NN flip-flop coupling");
  spin->add_option("--jz", cfg.jz, "NN Ising coupling");
  spin->add_option("--jxy2", cfg.jxy2, "Next-NN flip-flop coupling");
  spin->add_option("--jz2", cfg.jz2, "Next-NN Ising coupling");

  auto* billiard = generate->add_subcommand("circle-billiard",
                                            "Squared Bessel zeros");
  billiard->add_option("--max-order", cfg.billiard.max_order,
                       "Largest angular order n");
  billiard->add_option("--zeros-per-order", cfg.billiard.zeros_per_order,
                       "Radial zeros per order");
  bool keep_both = false;
  billiard->add_flag("--keep-both", keep_both,
                     "Keep both copies of degenerate n > 0 levels");

  for (auto* sub : {goe, poisson, spin, billiard}) {
    sub->add_option("--outdir", cfg.outdir, "Output directory");
  }

  auto* analyze = app.add_subcommand("analyze", "Deduce the sector count");
  analyze->add_option("--input", cfg.input, "Level file")->required();
  analyze->add_option("--outdir", cfg.outdir, "Output directory");
  add_analysis_flags(*analyze, cfg);
  analyze->add_option("--bins", cfg.bins, "Histogram bins");
  analyze->add_option("--cut", cfg.cut, "Histogram upper cut");

  auto* missing = app.add_subcommand("missing-levels",
                                     "Robustness to deleted levels");
  missing->add_option("--input", cfg.input, "Level file")->required();
  missing->add_option("--outdir", cfg.outdir, "Output directory");
  missing->add_option("--fractions", cfg.fractions,
                      "Deletion fractions in [0, 1)")
      ->delimiter(',');
  missing->add_option("--trials", cfg.trials, "Trials per fraction");
  missing->add_option("--order", cfg.order, "Ratio order k");
  missing->add_option("--seed", cfg.seed, "RNG seed");
  missing->add_option("--grid-lo", cfg.grid.lo, "Lowest beta'");
  missing->add_option("--grid-hi", cfg.grid.hi, "Highest beta'");
  missing->add_option("--grid-step", cfg.grid.step, "Scan grid step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::cerr << "hosr: error[usage]: " << e.what() << "\n";
    return 2;
  }
  if (keep_both) {
    cfg.billiard.policy = hosr::DegeneracyPolicy::kKeepBoth;
  }

  try {
    if (generate->parsed()) {
      cfg.command = hosr::Command::kGenerate;
      if (goe->parsed()) {
        cfg.generate_kind = hosr::GenerateKind::kGoe;
      } else if (poisson->parsed()) {
        cfg.generate_kind = hosr::GenerateKind::kPoisson;
      } else if (spin->parsed()) {
        cfg.generate_kind = hosr::GenerateKind::kSpinChain;
      } else {
        cfg.generate_kind = hosr::GenerateKind::kCircleBilliard;
      }
      const auto res = hosr::cmd_generate(cfg);
      std::cout << "wrote " << res.n_levels << " levels to "
                << res.levels_path.string() << "\n";
    } else if (analyze->parsed()) {
      cfg.command = hosr::Command::kAnalyze;
      const auto inf = hosr::cmd_analyze(cfg);
      std::cout << "verdict: " << inf.verdict.to_string() << "\n";
      for (const auto& r : inf.reports) {
        std::printf("k=%d n=%zu beta_hat=%.2f D_min/n=%.5f ks_d=%.4f "
                    "ks_p=%.3g poisson_ks_p=%.3g\n",
                    r.k, r.n_ratios, r.beta_hat, r.d_min_mean, r.ks.d, r.ks.p,
                    r.poisson_ks.p);
      }
    } else if (missing->parsed()) {
      cfg.command = hosr::Command::kMissingLevels;
      const auto rows = hosr::cmd_missing_levels(cfg);
      for (const auto& row : rows) {
        std::printf("fraction=%.3f mean_beta_hat=%.3f stddev=%.3f\n",
                    row.fraction, row.mean_beta_hat, row.stddev_beta_hat);
      }
    }
  } catch (const hosr::Error& e) {
    std::cerr << "hosr: error[" << e.category() << "]: " << e.what() << "\n";
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    std::cerr << "hosr: error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
