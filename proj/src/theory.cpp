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

#include "hosr/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "hosr/errors.hpp"
#include "hosr/quadrature.hpp"

namespace hosr {

namespace {

constexpr int kTableCells = 2048;

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("Dyson index must be positive and finite, got " +
                      std::to_string(beta));
  }
}

void check_order(int k) {
  if (k < 1) {
    throw DomainError("ratio order must be >= 1, got " + std::to_string(k));
  }
}

void check_r(double r) {
  if (!(r >= 0.0)) {
    throw DomainError("ratio argument must be >= 0");
  }
}

// Unnormalized (r + r^2)^b / (1 + r + r^2)^(1 + 3b/2).
double wigner_kernel(double r, double beta) {
  if (r == 0.0) {
    return 0.0;
  }
  if (std::isinf(r)) {
    return 0.0;
  }
  const double a = r + r * r;
  return std::exp(beta * std::log(a) - (1.0 + 1.5 * beta) * std::log1p(a));
}

// (2k-1)! / ((k-1)!)^2 = (2k-1) * binom(2k-2, k-1), exact while it fits
// in a double mantissa.
double poisson_constant(int k) {
  std::uint64_t binom = 1;
  const std::uint64_t n = 2 * static_cast<std::uint64_t>(k) - 2;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(k) - 1; ++i) {
    const std::uint64_t next = binom * (n - i + 1);
    if (next / (n - i + 1) != binom || next > (std::uint64_t{1} << 53)) {
      return std::exp(std::lgamma(2.0 * k) - 2.0 * std::lgamma(double(k)));
    }
    binom = next / i;
  }
  const std::uint64_t c = binom * (2 * static_cast<std::uint64_t>(k) - 1);
  if (c > (std::uint64_t{1} << 53)) {
    return std::exp(std::lgamma(2.0 * k) - 2.0 * std::lgamma(double(k)));
  }
  return static_cast<double>(c);
}

double hermite(double f0, double d0, double f1, double d1, double h,
               double s) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1;
}

}  // namespace

double normalization_constant(double beta) {
  check_beta(beta);
  const auto integral = quad::integrate(
      [beta](double r) { return wigner_kernel(r, beta); }, 0.0, 1.0, 1e-13);
  if (!(integral.value > 0.0) || !std::isfinite(integral.value)) {
    throw NumericError("normalization integral degenerate at beta " +
                       std::to_string(beta));
  }
  return 1.0 / (2.0 * integral.value);
}

double wigner_ratio_pdf(double r, double beta) {
  check_beta(beta);
  check_r(r);
  return normalization_constant(beta) * wigner_kernel(r, beta);
}

double poisson_hosr_pdf(double r, int k) {
  check_order(k);
  check_r(r);
  if (std::isinf(r)) {
    return 0.0;
  }
  return poisson_constant(k) * std::pow(r, k - 1) / std::pow(1.0 + r, 2 * k);
}

double gamma_spacing_pdf(double z, int k) {
  check_order(k);
  if (!(z >= 0.0)) {
    throw DomainError("spacing argument must be >= 0");
  }
  if (z == 0.0) {
    return k == 1 ? 1.0 : 0.0;
  }
  return std::exp(-z + (k - 1) * std::log(z) - std::lgamma(double(k)));
}

// Cumulative table in the stretched variable t = r^(1/q), t in [0, 1].
// The stretch makes the integrand behave like t^((beta+1)q - 1) near 0, which
// is smooth enough for cubic Hermite interpolation at any beta.
struct TheoryDist::Table {
  double stretch = 2.0;
  std::vector<double> value;  // I(r(t_j))
  std::vector<double> slope;  // dI/dt at t_j
};

TheoryDist TheoryDist::wigner_ratio(double beta) {
  check_beta(beta);
  TheoryDist d;
  d.family_ = Family::kWignerRatio;
  d.beta_ = beta;
  d.norm_ = normalization_constant(beta);

  auto table = std::make_shared<Table>();
  const double q = std::max(2.0, 5.0 / (beta + 1.0));
  table->stretch = q;
  const auto integrand = [beta, q](double t) {
    if (t == 0.0) {
      return 0.0;
    }
    return wigner_kernel(std::pow(t, q), beta) * q * std::pow(t, q - 1.0);
  };
  const double h = 1.0 / kTableCells;
  std::vector<double> cumulative(kTableCells + 1, 0.0);
  for (int j = 0; j < kTableCells; ++j) {
    cumulative[j + 1] =
        cumulative[j] + quad::gauss_kronrod15(integrand, j * h, (j + 1) * h)
                            .value;
  }
  const double half_mass = cumulative.back();
  if (std::abs(2.0 * d.norm_ * half_mass - 1.0) > 1e-8) {
    std::ostringstream msg;
    msg << "WignerRatio(beta'=" << beta
        << ") table does not integrate to 1: 2*C*I = "
        << 2.0 * d.norm_ * half_mass;
    throw NumericError(msg.str());
  }
  // Normalize by the table's own mass so that I(1) = 1/2 exactly.
  const double scale = 0.5 / half_mass;
  table->value.resize(kTableCells + 1);
  table->slope.resize(kTableCells + 1);
  for (int j = 0; j <= kTableCells; ++j) {
    table->value[j] = cumulative[j] * scale;
    table->slope[j] = integrand(j * h) * scale;
  }
  d.table_ = std::move(table);
  return d;
}

TheoryDist TheoryDist::poisson_hosr(int k) {
  check_order(k);
  TheoryDist d;
  d.family_ = Family::kPoissonHosr;
  d.order_ = k;
  d.norm_ = poisson_constant(k);
  return d;
}

double TheoryDist::pdf(double r) const {
  check_r(r);
  if (family_ == Family::kPoissonHosr) {
    return poisson_hosr_pdf(r, order_);
  }
  return norm_ * wigner_kernel(r, beta_);
}

double TheoryDist::wigner_cdf_unit(double r) const {
  const Table& tab = *table_;
  const double t = std::pow(r, 1.0 / tab.stretch);
  const double pos = t * kTableCells;
  const int j = std::min(static_cast<int>(pos), kTableCells - 1);
  const double s = pos - j;
  return hermite(tab.value[j], tab.slope[j], tab.value[j + 1],
                 tab.slope[j + 1], 1.0 / kTableCells, s);
}

// I_x(k, k) = sum_{j=k}^{2k-1} binom(2k-1, j) x^j (1-x)^(2k-1-j).
double TheoryDist::poisson_cdf_unit(double r) const {
  if (r == 0.0) {
    return 0.0;
  }
  const int n = 2 * order_ - 1;
  const double log_x = std::log(r) - std::log1p(r);
  const double log_1mx = -std::log1p(r);
  const double log_n_fact = std::lgamma(n + 1.0);
  double sum = 0.0;
  for (int j = order_; j <= n; ++j) {
    const double log_term = log_n_fact - std::lgamma(j + 1.0) -
                            std::lgamma(n - j + 1.0) + j * log_x +
                            (n - j) * log_1mx;
    sum += std::exp(log_term);
  }
  return std::min(sum, 1.0);
}

double TheoryDist::cdf(double r) const {
  check_r(r);
  if (std::isinf(r)) {
    return 1.0;
  }
  const auto unit = [this](double x) {
    return family_ == Family::kPoissonHosr ? poisson_cdf_unit(x)
                                           : wigner_cdf_unit(x);
  };
  if (r <= 1.0) {
    return unit(r);
  }
  return 1.0 - unit(1.0 / r);
}

double TheoryDist::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("quantile level must be in [0, 1]");
  }
  if (p == 0.0) {
    return 0.0;
  }
  if (p == 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  if (p > 0.5) {
    return 1.0 / quantile(1.0 - p);
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string TheoryDist::describe() const {
  std::ostringstream out;
  if (family_ == Family::kPoissonHosr) {
    out << "PoissonHosr(k=" << order_ << ")";
  } else {
    out << "WignerRatio(beta'=" << beta_ << ")";
  }
  return out.str();
}

}  // namespace hosr
