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

#ifndef HOSR_SPECTRUM_HPP_
#define HOSR_SPECTRUM_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hosr {

/// A sorted sequence of finite energy levels with a provenance label.
///
/// Construction goes through `make_spectrum`, which validates and sorts.
/// Instances are immutable.
class Spectrum {
 public:
  const std::vector<double>& levels() const noexcept { return levels_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }

 private:
  friend Spectrum make_spectrum(std::vector<double> raw, std::string label);
  Spectrum(std::vector<double> levels, std::string label)
      : levels_(std::move(levels)), label_(std::move(label)) {}

  std::vector<double> levels_;
  std::string label_;
};

/// Validates `raw` (at least 3 entries, all finite) and returns a sorted copy.
/// Throws SizeError or ValidationError (carrying the offending index).
Spectrum make_spectrum(std::vector<double> raw, std::string label = {});

/// Keeps one level from each run of levels closer than
/// rel_tol * (E_max - E_min) to its predecessor. Exact degeneracies left by
/// an unresolved symmetry otherwise show up as zero spacings.
Spectrum collapse_degeneracies(const Spectrum& s, double rel_tol = 1e-9);

/// k-th order spacing ratios r_i = (E_{i+2k} - E_{i+k}) / (E_{i+k} - E_i),
/// sliding over every i. Ratios with a zero denominator are dropped and
/// counted; values.size() + dropped_count == source_length - 2k.
struct RatioSeries {
  int order = 1;
  std::vector<double> values;
  std::size_t dropped_count = 0;
  std::size_t source_length = 0;
};

/// s_i^{(k)} = E_{i+k} - E_i for i = 0..N-k-1.
std::vector<double> spacings(const Spectrum& s, int k);

RatioSeries spacing_ratios(const Spectrum& s, int k);

/// Right-continuous step function F(x) = #{points <= x} / n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> points);

  double operator()(double x) const;
  std::span<const double> sorted_points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<double> points_;
};

EmpiricalCdf empirical_cdf(const RatioSeries& r);

struct HistogramBin {
  double center;
  double density;
};

/// Density histogram on [0, upper_cut], normalized by the in-range mass so
/// that sum(density * width) = 1 whenever any sample falls inside; samples
/// beyond the cut are tallied in `overflow`.
struct Histogram {
  std::vector<HistogramBin> bins;
  double bin_width = 0.0;
  std::size_t overflow = 0;
  std::size_t total = 0;
};

Histogram histogram(std::span<const double> values, int bin_count,
                    double upper_cut);

inline Histogram histogram(const RatioSeries& r, int bin_count,
                           double upper_cut) {
  return histogram(std::span<const double>(r.values), bin_count, upper_cut);
}

}  // namespace hosr

#endif  // HOSR_SPECTRUM_HPP_
