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

#ifndef HOSR_QUADRATURE_HPP_
#define HOSR_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "hosr/errors.hpp"

namespace hosr::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (indices 1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

/// Single G7-K15 panel on [a, b]. The error is |K15 - G7|.
template <typename F>
Estimate gauss_kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * detail::kKronrodWeights[7];
  double gauss = fc * detail::kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * detail::kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += detail::kKronrodWeights[j] * pair;
    if (j % 2 == 1) {
      gauss += detail::kGaussWeights[j / 2] * pair;
    }
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

/// Globally adaptive G7-K15 quadrature: the panel with the largest error
/// estimate is bisected until the summed error is below
/// max(abs_tol, rel_tol * |value|). Throws NumericError when `max_panels`
/// is exhausted first.
template <typename F>
Estimate integrate(const F& f, double a, double b, double rel_tol = 1e-12,
                   double abs_tol = 0.0, std::size_t max_panels = 4000) {
  struct Panel {
    double a, b;
    Estimate est;
    bool operator<(const Panel& o) const { return est.error < o.est.error; }
  };
  std::priority_queue<Panel> heap;
  Estimate total = gauss_kronrod15(f, a, b);
  heap.push({a, b, total});
  while (total.error > std::max(abs_tol, rel_tol * std::abs(total.value))) {
    if (heap.size() >= max_panels) {
      throw NumericError("adaptive quadrature on [" + std::to_string(a) +
                         ", " + std::to_string(b) + "] did not converge: " +
                         "value " + std::to_string(total.value) +
                         ", error estimate " + std::to_string(total.error) +
                         " after " + std::to_string(heap.size()) + " panels");
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Estimate left = gauss_kronrod15(f, worst.a, mid);
    const Estimate right = gauss_kronrod15(f, mid, worst.b);
    total.value += left.value + right.value - worst.est.value;
    total.error += left.error + right.error - worst.est.error;
    heap.push({worst.a, mid, left});
    heap.push({mid, worst.b, right});
  }
  // Re-sum to shed the drift from incremental updates.
  Estimate resummed;
  while (!heap.empty()) {
    resummed.value += heap.top().est.value;
    resummed.error += heap.top().est.error;
    heap.pop();
  }
  return resummed;
}

}  // namespace hosr::quad

#endif  // HOSR_QUADRATURE_HPP_
