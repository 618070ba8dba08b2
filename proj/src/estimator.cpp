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

#include "hosr/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hosr/errors.hpp"
#include "hosr/parallel.hpp"

namespace hosr {

namespace {

std::vector<double> sorted_copy(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void ScanGrid::validate() const {
  if (!(lo > 0.0) || !(hi > lo) || !(step > 0.0) || !std::isfinite(hi) ||
      !std::isfinite(step)) {
    throw ConfigError("scan grid needs 0 < lo < hi and step > 0");
  }
}

std::vector<double> ScanGrid::points() const {
  validate();
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Round to 12 decimals so grid values print cleanly (0.1 * 3 etc.).
    out[i] = std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12;
  }
  return out;
}

WignerTable::WignerTable(const ScanGrid& grid)
    : grid_(grid), betas_(grid.points()) {
  dists_ = detail::parallel_map(betas_.size(), [this](std::size_t i) {
    return TheoryDist::wigner_ratio(betas_[i]);
  });
}

double kolmogorov_q(double lambda) {
  if (!(lambda > 0.0)) {
    return 1.0;
  }
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    // 1 - sqrt(2 pi)/lambda * sum_j exp(-(2j-1)^2 pi^2 / (8 lambda^2))
    const double w = pi * pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int j = 1; j <= 50; ++j) {
      const double term = std::exp(-(2 * j - 1) * (2 * j - 1) * w);
      sum += term;
      if (term < 1e-18 * sum) {
        break;
      }
    }
    return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-18) {
      break;
    }
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> sample, const TheoryDist& d) {
  if (sample.empty()) {
    throw SizeError("KS test of an empty sample");
  }
  const auto x = sorted_copy(sample);
  const double n = static_cast<double>(x.size());
  double dmax = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = d.cdf(x[i]);
    dmax = std::max({dmax, (i + 1) / n - f, f - i / n});
  }
  dmax = std::clamp(dmax, 0.0, 1.0);
  const double sqrt_n = std::sqrt(n);
  return {dmax, kolmogorov_q((sqrt_n + 0.12 + 0.11 / sqrt_n) * dmax)};
}

double d_statistic(std::span<const double> sorted_sample,
                   const TheoryDist& d) {
  if (sorted_sample.empty()) {
    throw SizeError("D statistic of an empty sample");
  }
  const std::size_t n = sorted_sample.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  double sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    // F_n is right-continuous: a run of ties shares the count through its end.
    std::size_t j = i + 1;
    while (j < n && sorted_sample[j] == sorted_sample[i]) {
      ++j;
    }
    const double ecdf = static_cast<double>(j) * inv_n;
    sum += static_cast<double>(j - i) *
           std::abs(ecdf - d.cdf(sorted_sample[i]));
    i = j;
  }
  return sum;
}

double d_statistic(const RatioSeries& r, double beta) {
  if (r.values.empty()) {
    throw SizeError("D statistic of an empty ratio series");
  }
  return d_statistic(sorted_copy(r.values), TheoryDist::wigner_ratio(beta));
}

namespace {

BetaScan scan_sorted(std::span<const double> sorted, const WignerTable& table) {
  if (sorted.empty()) {
    throw SizeError("beta scan of an empty ratio series");
  }
  const auto betas = table.betas();
  const auto dists = table.dists();
  auto values = detail::parallel_map(betas.size(), [&](std::size_t i) {
    return d_statistic(sorted, dists[i]);
  });
  BetaScan out;
  out.d_curve.reserve(betas.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericError("D statistic not finite at beta' = " +
                         std::to_string(betas[i]));
    }
    out.d_curve.emplace_back(betas[i], values[i]);
    if (values[i] < values[best]) {
      best = i;
    }
  }
  out.beta_hat = betas[best];
  out.d_min = values[best];
  return out;
}

}  // namespace

BetaScan scan_beta(const RatioSeries& r, const WignerTable& table) {
  return scan_sorted(sorted_copy(r.values), table);
}

BetaScan scan_beta(const RatioSeries& r, const ScanGrid& grid) {
  if (r.values.empty()) {
    throw SizeError("beta scan of an empty ratio series");
  }
  return scan_beta(r, WignerTable(grid));
}

std::string Verdict::to_string() const {
  switch (kind) {
    case VerdictKind::kChaotic:
      return "Chaotic(" + std::to_string(sectors) + ")";
    case VerdictKind::kIntegrable:
      return "Integrable";
    case VerdictKind::kInconclusive:
      break;
  }
  return "Inconclusive";
}

SectorInference infer_sectors(const Spectrum& s, const InferenceOptions& opt) {
  opt.grid.validate();
  if (opt.k_max < 1) {
    throw ConfigError("k_max must be >= 1");
  }
  if (s.size() < 2 * static_cast<std::size_t>(opt.k_max) + 1) {
    throw SizeError("spectrum of " + std::to_string(s.size()) +
                    " levels too short for k_max = " +
                    std::to_string(opt.k_max));
  }
  return infer_sectors(s, opt, WignerTable(opt.grid));
}

SectorInference infer_sectors(const Spectrum& s, const InferenceOptions& opt,
                              const WignerTable& table) {
  opt.grid.validate();
  if (opt.k_max < 1) {
    throw ConfigError("k_max must be >= 1");
  }
  if (!(opt.significance > 0.0 && opt.significance < 1.0)) {
    throw ConfigError("significance must be in (0, 1)");
  }
  if (s.size() < 2 * static_cast<std::size_t>(opt.k_max) + 1) {
    throw SizeError("spectrum of " + std::to_string(s.size()) +
                    " levels too short for k_max = " +
                    std::to_string(opt.k_max));
  }
  if (table.grid().lo != opt.grid.lo || table.grid().hi != opt.grid.hi ||
      table.grid().step != opt.grid.step) {
    throw ConfigError("Wigner table grid differs from the inference grid");
  }

  SectorInference out;
  out.n_levels = s.size();
  out.options = opt;
  out.reports = detail::parallel_map(
      static_cast<std::size_t>(opt.k_max), [&](std::size_t idx) {
        const int k = static_cast<int>(idx) + 1;
        const auto ratios = spacing_ratios(s, k);
        if (ratios.values.empty()) {
          throw SizeError("every order-" + std::to_string(k) +
                          " ratio was degenerate");
        }
        const auto sorted = sorted_copy(ratios.values);
        EstimateReport rep;
        rep.k = k;
        rep.n_ratios = sorted.size();
        rep.dropped = ratios.dropped_count;

        const auto poisson = TheoryDist::poisson_hosr(k);
        rep.poisson_ks = ks_test(sorted, poisson);
        rep.poisson_dist = poisson.describe();

        auto scan = scan_sorted(sorted, table);
        rep.beta_hat = scan.beta_hat;
        rep.d_min = scan.d_min;
        rep.d_min_mean = scan.d_min / static_cast<double>(rep.n_ratios);
        rep.at_grid_edge = !scan.d_curve.empty() &&
                           (scan.beta_hat == scan.d_curve.front().first ||
                            scan.beta_hat == scan.d_curve.back().first);
        rep.d_curve = std::move(scan.d_curve);

        const auto wigner = TheoryDist::wigner_ratio(k);
        rep.ks = ks_test(sorted, wigner);
        rep.dist_used = wigner.describe();
        return rep;
      });

  out.integrable_screen_passed = std::all_of(
      out.reports.begin(), out.reports.end(), [&](const EstimateReport& r) {
        return r.poisson_ks.p >= opt.significance;
      });
  if (out.integrable_screen_passed) {
    out.verdict = {VerdictKind::kIntegrable, 0};
    return out;
  }

  // A minimum on the grid boundary only bounds beta_hat from one side, so it
  // cannot confirm beta' = k; such orders are not candidates.
  const EstimateReport* best = nullptr;
  for (const auto& r : out.reports) {
    if (r.at_grid_edge) {
      continue;
    }
    const double gap = std::abs(r.beta_hat - r.k);
    if (best == nullptr || gap < std::abs(best->beta_hat - best->k)) {
      best = &r;
    }
  }
  out.verdict = {VerdictKind::kInconclusive, 0};
  // Grid values carry rounding noise; compare with a little slack.
  if (best != nullptr &&
      std::abs(best->beta_hat - best->k) <= opt.beta_tolerance + 1e-9 &&
      best->ks.p >= opt.significance) {
    out.verdict = {VerdictKind::kChaotic, best->k};
  }
  return out;
}

std::vector<MissingLevelsRow> missing_levels_experiment(
    const Spectrum& s, std::span<const double> fractions, int trials, int k,
    const RngStream& rng, const ScanGrid& grid) {
  grid.validate();
  if (trials < 1) {
    throw ConfigError("trials must be >= 1");
  }
  if (k < 1) {
    throw ConfigError("ratio order must be >= 1");
  }
  const std::size_t n = s.size();
  const std::size_t need = 2 * static_cast<std::size_t>(k) + 1;
  for (double f : fractions) {
    if (!(f >= 0.0 && f < 1.0)) {
      throw ConfigError("deletion fraction must be in [0, 1), got " +
                        std::to_string(f));
    }
    const auto removed = static_cast<std::size_t>(std::floor(f * n));
    if (n - removed < need) {
      throw SizeError("deleting fraction " + std::to_string(f) + " of " +
                      std::to_string(n) + " levels leaves fewer than " +
                      std::to_string(need));
    }
  }

  const WignerTable table(grid);
  std::vector<MissingLevelsRow> rows;
  rows.reserve(fractions.size());
  for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
    const double f = fractions[fi];
    const auto removed = static_cast<std::size_t>(std::floor(f * n));
    const auto frac_rng = rng.substream(fi);
    MissingLevelsRow row;
    row.fraction = f;
    row.beta_hats = detail::parallel_map(
        static_cast<std::size_t>(trials), [&](std::size_t t) {
          // Partial Fisher-Yates: the first `removed` slots are deleted.
          std::vector<std::size_t> order(n);
          std::iota(order.begin(), order.end(), std::size_t{0});
          auto eng = frac_rng.substream(t).engine();
          for (std::size_t i = 0; i < removed; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(order[i], order[pick(eng)]);
          }
          std::vector<char> keep(n, 1);
          for (std::size_t i = 0; i < removed; ++i) {
            keep[order[i]] = 0;
          }
          std::vector<double> kept;
          kept.reserve(n - removed);
          for (std::size_t i = 0; i < n; ++i) {
            if (keep[i]) {
              kept.push_back(s[i]);
            }
          }
          const auto thinned = make_spectrum(std::move(kept), s.label());
          return scan_beta(spacing_ratios(thinned, k), table).beta_hat;
        });
    const double mean =
        std::accumulate(row.beta_hats.begin(), row.beta_hats.end(), 0.0) /
        trials;
    double var = 0.0;
    for (double b : row.beta_hats) {
      var += (b - mean) * (b - mean);
    }
    row.mean_beta_hat = mean;
    row.stddev_beta_hat = trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hosr
