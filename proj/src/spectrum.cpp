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

#include "hosr/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "hosr/errors.hpp"

namespace hosr {

Spectrum make_spectrum(std::vector<double> raw, std::string label) {
  if (raw.size() < 3) {
    throw SizeError("spectrum needs at least 3 levels, got " +
                    std::to_string(raw.size()));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw ValidationError("non-finite level at index " + std::to_string(i),
                            i);
    }
  }
  std::sort(raw.begin(), raw.end());
  return Spectrum(std::move(raw), std::move(label));
}

Spectrum collapse_degeneracies(const Spectrum& s, double rel_tol) {
  if (!(rel_tol >= 0.0)) {
    throw DomainError("degeneracy tolerance must be >= 0");
  }
  const auto& e = s.levels();
  const double tol = rel_tol * (e.back() - e.front());
  std::vector<double> kept{e.front()};
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] - e[i - 1] > tol) kept.push_back(e[i]);
  }
  return make_spectrum(std::move(kept), s.label());
}

std::vector<double> spacings(const Spectrum& s, int k) {
  if (k < 1) {
    throw DomainError("spacing order must be >= 1");
  }
  const auto n = s.size();
  if (static_cast<std::size_t>(k) > n - 1) {
    throw SizeError("spacing order " + std::to_string(k) +
                    " too large for " + std::to_string(n) + " levels");
  }
  const auto& e = s.levels();
  std::vector<double> out(n - k);
  for (std::size_t i = 0; i + k < n; ++i) {
    out[i] = e[i + k] - e[i];
  }
  return out;
}

RatioSeries spacing_ratios(const Spectrum& s, int k) {
  if (k < 1) {
    throw DomainError("ratio order must be >= 1");
  }
  const auto n = s.size();
  const auto span = 2 * static_cast<std::size_t>(k);
  if (n < span + 1) {
    throw SizeError("order " + std::to_string(k) + " ratios need at least " +
                    std::to_string(span + 1) + " levels, got " +
                    std::to_string(n));
  }
  const auto& e = s.levels();
  RatioSeries out;
  out.order = k;
  out.source_length = n;
  out.values.reserve(n - span);
  for (std::size_t i = 0; i + span < n; ++i) {
    const double den = e[i + k] - e[i];
    if (den == 0.0) {
      ++out.dropped_count;
      continue;
    }
    out.values.push_back((e[i + span] - e[i + k]) / den);
  }
  return out;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw SizeError("empirical CDF of an empty sample");
  }
  std::sort(points_.begin(), points_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(points_.begin(), points_.end(), x);
  return static_cast<double>(it - points_.begin()) /
         static_cast<double>(points_.size());
}

EmpiricalCdf empirical_cdf(const RatioSeries& r) {
  return EmpiricalCdf(r.values);
}

Histogram histogram(std::span<const double> values, int bin_count,
                    double upper_cut) {
  if (bin_count < 2) {
    throw DomainError("histogram needs at least 2 bins");
  }
  if (!(upper_cut > 0.0) || !std::isfinite(upper_cut)) {
    throw DomainError("histogram upper cut must be positive and finite");
  }
  Histogram h;
  h.bin_width = upper_cut / bin_count;
  h.total = values.size();
  std::vector<std::size_t> counts(bin_count, 0);
  for (double v : values) {
    if (v < 0.0) {
      throw DomainError("histogram of negative value");
    }
    if (v > upper_cut) {
      ++h.overflow;
      continue;
    }
    auto bin = static_cast<std::size_t>(v / h.bin_width);
    counts[std::min<std::size_t>(bin, bin_count - 1)] += 1;
  }
  // Densities integrate to 1 over [0, cut]; the overflow is reported apart.
  const std::size_t in_range = h.total - h.overflow;
  const double scale =
      in_range == 0 ? 0.0 : 1.0 / (static_cast<double>(in_range) * h.bin_width);
  h.bins.reserve(bin_count);
  for (int b = 0; b < bin_count; ++b) {
    h.bins.push_back({(b + 0.5) * h.bin_width,
                      static_cast<double>(counts[b]) * scale});
  }
  return h;
}

}  // namespace hosr
