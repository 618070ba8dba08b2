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

// Test-only reference computations. Nothing here calls into the library's
// numerical paths; each oracle reaches its answer by a different route.

#ifndef HOSR_TESTS_ORACLES_HPP_
#define HOSR_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Composite trapezoid rule on [0, upper] with `panels` panels, plus the
/// analytic tail of the (r + r^2)^b / (1 + r + r^2)^(1 + 3b/2) kernel, which
/// decays like r^(-2 - b): tail ~ upper^(-1 - b) / (1 + b).
inline double wigner_normalization_trapezoid(double beta,
                                             double upper = 1e4,
                                             long panels = 20'000'000) {
  const auto f = [beta](long double r) -> long double {
    if (r == 0) return 0;
    const long double a = r + r * r;
    return std::pow(a, (long double)beta) /
           std::pow(1 + a, 1 + 1.5L * beta);
  };
  // Stretch r = u^2 so the r ~ 0 behaviour is resolved.
  const long double umax = std::sqrt((long double)upper);
  const long double h = umax / panels;
  long double sum = 0.5L * f(0) * 0 + 0.5L * f(upper) * 2 * umax;
  for (long i = 1; i < panels; ++i) {
    const long double u = i * h;
    sum += f(u * u) * 2 * u;
  }
  long double integral = sum * h;
  integral += std::pow((long double)upper, -1 - (long double)beta) /
              (1 + (long double)beta);
  return static_cast<double>(1.0L / integral);
}

/// Trapezoid integral of f on [a, b].
inline double trapezoid(const std::function<double(double)>& f, double a,
                        double b, long panels) {
  const double h = (b - a) / panels;
  double sum = 0.5 * (f(a) + f(b));
  for (long i = 1; i < panels; ++i) {
    sum += f(a + i * h);
  }
  return sum * h;
}

/// Golden-section search for the maximizer of f on [a, b].
inline double golden_argmax(const std::function<double(double)>& f, double a,
                            double b, double tol = 1e-11) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  while (b - a > tol) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

/// J_n(x) by its ascending series in long double; reliable for x <~ 25.
inline long double bessel_j_series(int n, long double x) {
  const long double half = x / 2;
  long double term = 1;
  for (int i = 1; i <= n; ++i) {
    term *= half / i;
  }
  long double sum = term;
  for (int m = 1; m < 400; ++m) {
    term *= -half * half / (m * static_cast<long double>(m + n));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum)) {
      break;
    }
  }
  return sum;
}

/// Bisection on the series J_n between a and b (sign change assumed).
inline double bessel_zero_bisect(int n, double a, double b) {
  long double lo = a;
  long double hi = b;
  long double flo = bessel_j_series(n, lo);
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    const long double fm = bessel_j_series(n, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

/// Full 2^L spin-1/2 chain Hamiltonian built from Kronecker products of
/// single-site spin matrices (complex, factor order site 0 first, local basis
/// (down, up)). Returned as the real part; the imaginary part must vanish.
struct FullChain {
  Eigen::MatrixXd h;
  double max_imag = 0.0;
};

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline FullChain full_chain_hamiltonian(int sites, double jxy, double jz,
                                        double jxy2, double jz2, double eta) {
  using C = std::complex<double>;
  const C i1(0.0, 1.0);
  Eigen::MatrixXcd sx(2, 2), sy(2, 2), sz(2, 2), id(2, 2);
  sx << 0, 0.5, 0.5, 0;
  sy << 0, 0.5 * i1, -0.5 * i1, 0;
  sz << -0.5, 0, 0, 0.5;
  id << 1, 0, 0, 1;

  const auto two_site = [&](const Eigen::MatrixXcd& op, int a, int b) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int s = 0; s < sites; ++s) {
      out = kron(out, (s == a || s == b) ? op : id);
    }
    return out;
  };
  const int dim = 1 << sites;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const auto add_bond = [&](int a, int b, double cxy, double cz) {
    h += cxy * (two_site(sx, a, b) + two_site(sy, a, b));
    h += cz * two_site(sz, a, b);
  };
  for (int a = 0; a + 1 < sites; ++a) add_bond(a, a + 1, jxy, jz);
  for (int a = 0; a + 2 < sites; ++a) add_bond(a, a + 2, eta * jxy2, eta * jz2);
  return {h.real(), h.imag().cwiseAbs().maxCoeff()};
}

/// Full-space index of an occupation mask (bit i = site i up) under the
/// Kronecker convention above: site i sits at bit (L - 1 - i).
inline std::uint64_t full_index(std::uint64_t mask, int sites) {
  std::uint64_t out = 0;
  for (int i = 0; i < sites; ++i) {
    if ((mask >> i) & 1U) out |= std::uint64_t{1} << (sites - 1 - i);
  }
  return out;
}

/// Two-sample KS distance.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

/// One-sample KS distance against an arbitrary CDF.
inline double ks_distance(std::vector<double> x,
                          const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

}  // namespace oracle

#endif  // HOSR_TESTS_ORACLES_HPP_
