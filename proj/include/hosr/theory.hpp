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

#ifndef HOSR_THEORY_HPP_
#define HOSR_THEORY_HPP_

#include <memory>
#include <string>
#include <vector>

namespace hosr {

/// Normalization C of the Wigner-like ratio density
///   P(r, b) = C (r + r^2)^b / (1 + r + r^2)^(1 + 3b/2)
/// at any real b > 0. Uses the r -> 1/r symmetry of the integrand, so that
/// C = 1 / (2 * integral over [0, 1]).
double normalization_constant(double beta);

/// P(r, beta). Recomputes C on every call; build a TheoryDist when
/// evaluating many points.
double wigner_ratio_pdf(double r, double beta);

/// Ratio density of two independent order-k spacings of uncorrelated levels:
///   (2k-1)! / ((k-1)!)^2 * r^(k-1) / (1+r)^(2k).
double poisson_hosr_pdf(double r, int k);

/// Density of the sum of k unit-mean exponential spacings.
double gamma_spacing_pdf(double z, int k);

enum class Family { kWignerRatio, kPoissonHosr };

/// A reference ratio distribution with pdf and CDF evaluation.
///
/// For the Wigner family the CDF is served from a table of exact cumulative
/// integrals on [0, 1] with cubic Hermite interpolation (the derivative at
/// each node is the pdf itself); r > 1 is mapped through I(r) = 1 - I(1/r).
/// The Poisson family uses the regularized incomplete beta I_x(k, k) with
/// x = r / (1 + r), summed in closed form.
///
/// Copies share the immutable table.
class TheoryDist {
 public:
  static TheoryDist wigner_ratio(double beta);
  static TheoryDist poisson_hosr(int k);

  Family family() const noexcept { return family_; }
  /// Dyson-like index for the Wigner family.
  double beta() const noexcept { return beta_; }
  /// Order k for the Poisson family.
  int order() const noexcept { return order_; }
  /// The multiplicative constant in front of the density.
  double normalization() const noexcept { return norm_; }

  double pdf(double r) const;
  double cdf(double r) const;
  /// Inverse CDF for p in [0, 1]; used to build ideal quantile samples.
  double quantile(double p) const;

  /// e.g. "WignerRatio(beta'=2.5)" or "PoissonHosr(k=3)".
  std::string describe() const;

 private:
  struct Table;

  TheoryDist() = default;
  double wigner_cdf_unit(double r) const;
  double poisson_cdf_unit(double r) const;

  Family family_ = Family::kWignerRatio;
  double beta_ = 0.0;
  int order_ = 0;
  double norm_ = 0.0;
  std::shared_ptr<const Table> table_;
};

inline double cdf(const TheoryDist& d, double r) { return d.cdf(r); }

}  // namespace hosr

#endif  // HOSR_THEORY_HPP_
