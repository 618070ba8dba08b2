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

#ifndef HOSR_PIPELINE_HPP_
#define HOSR_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hosr/estimator.hpp"
#include "hosr/models.hpp"
#include "hosr/spectrum.hpp"

namespace hosr {

const char* version();

// Level files: plain text, one or more whitespace-separated reals per line,
// blank lines and lines whose first non-blank character is '#' ignored.

struct LevelFile {
  std::filesystem::path path;
  std::vector<double> levels;  // file order
};

/// Locale-independent parse. Throws IoError, ParseError (1-based line and
/// column of the offending token) or SizeError (< 3 levels).
LevelFile parse_level_file(const std::filesystem::path& path);

/// Parses already-loaded text; `origin` is only used in messages.
LevelFile parse_level_text(const std::string& text,
                           const std::filesystem::path& origin = "<memory>");

/// One level per line at 17 significant digits, so doubles round-trip.
void write_level_file(const std::filesystem::path& path, const Spectrum& s);

enum class Command { kGenerate, kAnalyze, kMissingLevels };
enum class GenerateKind { kGoe, kPoisson, kSpinChain, kCircleBilliard };

std::string to_string(Command c);
std::string to_string(GenerateKind k);

struct RunConfig {
  Command command = Command::kAnalyze;
  GenerateKind generate_kind = GenerateKind::kGoe;
  std::filesystem::path input;
  std::filesystem::path outdir = ".";

  // analysis
  int k_max = 8;
  ScanGrid grid;
  double significance = 0.05;
  double beta_tolerance = 0.3;
  int bins = 50;
  std::optional<double> cut;  // default 5 for k <= 2, 4 for k >= 3

  // generation
  std::uint64_t seed = 0;
  int blocks = 1;
  int dim = 5000;
  bool tridiagonal = true;
  int n = 100000;  // poisson level count
  int sites = 13;
  double eta = 0.5;
  std::optional<int> n_up;  // default sites / 2
  double jxy = 1.0;
  double jz = 0.5;
  double jxy2 = 1.0;
  double jz2 = 0.5;
  BilliardLevels billiard{200, 64, DegeneracyPolicy::kKeepOnce};

  // missing levels
  std::vector<double> fractions{0.0, 0.1, 0.2, 0.3};
  int trials = 20;
  int order = 2;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
  double cut_for(int k) const;
  SpinChainParams spin_chain() const;
  InferenceOptions inference() const;
  /// Deterministic JSON rendering of every field, echoed into outputs.
  std::string to_json() const;
};

struct GenerateResult {
  std::filesystem::path levels_path;
  std::filesystem::path metadata_path;
  std::size_t n_levels = 0;
};

/// Builds the spectrum described by `cfg` without touching the filesystem.
Spectrum generate_spectrum(const RunConfig& cfg);

/// Writes <outdir>/levels.txt and the sidecar <outdir>/levels.json.
GenerateResult cmd_generate(const RunConfig& cfg);

/// Writes <outdir>/report.json, hist_k<k>.csv and dcurve_k<k>.csv.
SectorInference cmd_analyze(const RunConfig& cfg);

/// Analysis of an in-memory spectrum with the same outputs as cmd_analyze.
SectorInference analyze_spectrum(const Spectrum& s, const RunConfig& cfg);

/// Structured report text exactly as written by cmd_analyze.
std::string render_report(const SectorInference& inf, const RunConfig& cfg);

/// Writes <outdir>/missing_levels.csv (fraction, mean_beta_hat,
/// stddev_beta_hat) and <outdir>/missing_levels.json.
std::vector<MissingLevelsRow> cmd_missing_levels(const RunConfig& cfg);

}  // namespace hosr

#endif  // HOSR_PIPELINE_HPP_
