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

#include <cmath>
#include <limits>

#include "hosr/errors.hpp"
#include "hosr/models.hpp"
#include "hosr/parallel.hpp"

namespace hosr {

namespace {

constexpr double kScanStep = 0.5;

double bessel_j(int n, double x) {
  return std::cyl_bessel_j(static_cast<double>(n), x);
}

double refine_zero(int n, double lo, double hi) {
  double f_lo = bessel_j(n, lo);
  for (int it = 0; it < 200; ++it) {
    if (hi - lo <= 1e-14 * hi) {
      return 0.5 * (lo + hi);
    }
    const double mid = 0.5 * (lo + hi);
    const double f_mid = bessel_j(n, mid);
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  throw NumericError("Bessel zero of order " + std::to_string(n) +
                     " in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] did not converge");
}

}  // namespace

std::vector<double> bessel_zeros(int n, int max_count, double upper) {
  if (n < 0) {
    throw DomainError("Bessel order must be >= 0");
  }
  std::vector<double> zeros;
  if (max_count <= 0) {
    return zeros;
  }
  // j_{n,1} > n, so the scan can start there (J_0 starts at 1 > 0).
  double a = std::max(static_cast<double>(n), 1e-3);
  double fa = bessel_j(n, a);
  while (static_cast<int>(zeros.size()) < max_count && a <= upper) {
    const double b = a + kScanStep;
    const double fb = bessel_j(n, b);
    if (fb == 0.0 || (fa < 0.0) != (fb < 0.0)) {
      const double z = fb == 0.0 ? b : refine_zero(n, a, b);
      if (z > upper) {
        break;
      }
      zeros.push_back(z);
      if (fb == 0.0) {
        // Step past the exact root so the next bracket starts clean.
        a = b + 1e-9;
        fa = bessel_j(n, a);
        continue;
      }
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

double bessel_zero(int n, int k) {
  if (k < 1) {
    throw DomainError("Bessel zero index must be >= 1");
  }
  const auto zeros =
      bessel_zeros(n, k, std::numeric_limits<double>::infinity());
  if (static_cast<int>(zeros.size()) < k) {
    throw NumericError("Bessel zero (" + std::to_string(n) + ", " +
                       std::to_string(k) + ") not found");
  }
  return zeros.back();
}

Spectrum circular_billiard_levels(const BilliardLevels& b) {
  if (b.max_order < 0 || b.zeros_per_order < 1) {
    throw DomainError("billiard needs max_order >= 0 and zeros_per_order >= 1");
  }
  const double top = bessel_zero(0, b.zeros_per_order);
  auto per_order = detail::parallel_map(
      static_cast<std::size_t>(b.max_order) + 1, [&](std::size_t n) {
        return bessel_zeros(static_cast<int>(n), b.zeros_per_order, top);
      });
  std::vector<double> levels;
  for (std::size_t n = 0; n < per_order.size(); ++n) {
    const int copies =
        (n > 0 && b.policy == DegeneracyPolicy::kKeepBoth) ? 2 : 1;
    for (double z : per_order[n]) {
      for (int c = 0; c < copies; ++c) {
        levels.push_back(z * z);
      }
    }
  }
  const std::string policy =
      b.policy == DegeneracyPolicy::kKeepBoth ? "keep-both" : "keep-once";
  return make_spectrum(std::move(levels),
                       "circle-billiard n_max=" + std::to_string(b.max_order) +
                           " k_max=" + std::to_string(b.zeros_per_order) +
                           " " + policy);
}

}  // namespace hosr
