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

#ifndef HOSR_ESTIMATOR_HPP_
#define HOSR_ESTIMATOR_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hosr/ensembles.hpp"
#include "hosr/spectrum.hpp"
#include "hosr/theory.hpp"

namespace hosr {

/// Uniform grid of trial indices beta' = lo + i * step, i = 0..n-1, where the
/// last point is the largest one not exceeding hi (up to 1e-9 slack).
struct ScanGrid {
  double lo = 0.5;
  double hi = 8.0;
  double step = 0.1;

  void validate() const;
  std::vector<double> points() const;
};

/// Wigner-ratio distributions for every point of a grid, built once and
/// shared by all scans that use the same grid.
class WignerTable {
 public:
  explicit WignerTable(const ScanGrid& grid);

  const ScanGrid& grid() const noexcept { return grid_; }
  std::span<const double> betas() const noexcept { return betas_; }
  std::span<const TheoryDist> dists() const noexcept { return dists_; }

 private:
  ScanGrid grid_;
  std::vector<double> betas_;
  std::vector<TheoryDist> dists_;
};

struct KsResult {
  double d = 0.0;
  double p = 1.0;
};

/// Asymptotic Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^(j-1)
/// exp(-2 j^2 lambda^2), switched to the theta-function form for small lambda
/// where the alternating series converges slowly.
double kolmogorov_q(double lambda);

/// One-sample two-sided KS test. p uses Q((sqrt(n) + 0.12 + 0.11/sqrt(n)) d).
/// Ratios of a sliding window are weakly dependent, so p is nominal.
KsResult ks_test(std::span<const double> sample, const TheoryDist& d);
inline KsResult ks_test(const RatioSeries& r, const TheoryDist& d) {
  return ks_test(std::span<const double>(r.values), d);
}

/// D(beta') = sum over observed ratios r_i of |F_n(r_i) - I(r_i, beta')|,
/// F_n being the empirical CDF of the same ratios.
double d_statistic(const RatioSeries& r, double beta);
double d_statistic(std::span<const double> sorted_sample, const TheoryDist& d);

struct BetaScan {
  double beta_hat = 0.0;
  double d_min = 0.0;
  std::vector<std::pair<double, double>> d_curve;  // (beta', D)
};

/// Grid argmin of D; ties go to the smaller beta'.
BetaScan scan_beta(const RatioSeries& r, const ScanGrid& grid);
BetaScan scan_beta(const RatioSeries& r, const WignerTable& table);

enum class VerdictKind { kChaotic, kIntegrable, kInconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::kInconclusive;
  int sectors = 0;  // meaningful for kChaotic only

  /// "Chaotic(3)", "Integrable" or "Inconclusive".
  std::string to_string() const;
  bool operator==(const Verdict&) const = default;
};

struct EstimateReport {
  int k = 1;
  std::size_t n_ratios = 0;
  std::size_t dropped = 0;
  double beta_hat = 0.0;
  double d_min = 0.0;       // raw sum at beta_hat
  double d_min_mean = 0.0;  // d_min / n_ratios
  bool at_grid_edge = false;  // beta_hat is the first or last grid point
  std::vector<std::pair<double, double>> d_curve;
  KsResult ks;              // against WignerRatio(beta' = k)
  std::string dist_used;
  KsResult poisson_ks;      // against PoissonHosr(k)
  std::string poisson_dist;
};

struct InferenceOptions {
  int k_max = 8;
  ScanGrid grid;
  double significance = 0.05;
  double beta_tolerance = 0.3;
};

struct SectorInference {
  std::size_t n_levels = 0;
  InferenceOptions options;
  bool integrable_screen_passed = false;
  std::vector<EstimateReport> reports;  // k = 1..k_max
  Verdict verdict;
};

/// Two-step deduction. First, if the k-th order ratios match PoissonHosr(k)
/// for every k = 1..k_max (KS not rejecting), the verdict is Integrable.
/// Otherwise beta' is scanned per k and the sector count is the k that
/// minimizes |beta_hat(k) - k| among orders whose minimum is interior to the
/// grid, accepted when that gap is within `beta_tolerance` and the KS test
/// against WignerRatio(k) does not reject.
SectorInference infer_sectors(const Spectrum& s, const InferenceOptions& opt);

/// Same, reusing a prebuilt table whose grid must equal opt.grid.
SectorInference infer_sectors(const Spectrum& s, const InferenceOptions& opt,
                              const WignerTable& table);

struct MissingLevelsRow {
  double fraction = 0.0;
  double mean_beta_hat = 0.0;
  double stddev_beta_hat = 0.0;
  std::vector<double> beta_hats;  // one per trial
};

/// For each fraction f, `trials` times: delete floor(f * N) levels chosen
/// uniformly without replacement, recompute order-k ratios and scan.
/// Trial t of fraction i draws from rng.substream(i).substream(t).
std::vector<MissingLevelsRow> missing_levels_experiment(
    const Spectrum& s, std::span<const double> fractions, int trials, int k,
    const RngStream& rng, const ScanGrid& grid = {});

}  // namespace hosr

#endif  // HOSR_ESTIMATOR_HPP_
