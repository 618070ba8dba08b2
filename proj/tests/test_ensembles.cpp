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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hosr/ensembles.hpp"
#include "hosr/errors.hpp"
#include "hosr/theory.hpp"
#include "oracles.hpp"

using namespace hosr;
using doctest::Approx;

namespace {

double ks_to(const Spectrum& s, int k, const TheoryDist& d) {
  return oracle::ks_distance(spacing_ratios(s, k).values,
                             [&](double r) { return d.cdf(r); });
}

std::vector<double> pooled_ratios(const std::vector<Spectrum>& parts, int k) {
  std::vector<double> out;
  for (const auto& s : parts) {
    const auto r = spacing_ratios(s, k);
    out.insert(out.end(), r.values.begin(), r.values.end());
  }
  return out;
}

// Semicircle CDF with radius R.
double semicircle_cdf(double x, double radius) {
  if (x <= -radius) return 0.0;
  if (x >= radius) return 1.0;
  const double u = x / radius;
  return 0.5 + (u * std::sqrt(1.0 - u * u) + std::asin(u)) / std::numbers::pi;
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
  const RngStream a(42);
  auto e1 = a.engine();
  auto e2 = a.engine();
  CHECK(e1() == e2());
  CHECK(a.substream(3).stream() == a.substream(3).stream());
  CHECK(a.substream(3).stream() != a.substream(4).stream());
  CHECK(a.substream(0).engine()() != a.substream(1).engine()());
  CHECK(RngStream(1).engine()() != RngStream(2).engine()());

  // First uniforms of neighbouring substreams are uncorrelated.
  std::vector<double> x, y;
  for (int i = 0; i < 20000; ++i) {
    auto ea = a.substream(2 * i).engine();
    auto eb = a.substream(2 * i + 1).engine();
    x.push_back(std::generate_canonical<double, 53>(ea));
    y.push_back(std::generate_canonical<double, 53>(eb));
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  CHECK(std::abs(sxy / std::sqrt(sxx * syy)) < 0.03);
}

TEST_CASE("dense GOE: trace identity and size") {
  const RngStream rng(11);
  const auto a = goe_dense_matrix(3, rng);
  CHECK((a - a.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const auto s = sample_goe_dense(3, rng);
  REQUIRE(s.size() == 3);
  CHECK(std::is_sorted(s.levels().begin(), s.levels().end()));
  const double sum = std::accumulate(s.levels().begin(), s.levels().end(), 0.0);
  CHECK(std::abs(sum - a.trace()) <= 1e-9 * std::max(1.0, std::abs(a.trace())));
  CHECK_THROWS_AS(sample_goe_dense(2, rng), SizeError);
  CHECK_THROWS_AS(sample_goe_tridiagonal(2, rng), SizeError);
  CHECK_THROWS_AS(sample_poisson_levels(2, rng), SizeError);
}

TEST_CASE("dense GOE density is a semicircle") {
  // Off-diagonal entries of (M + M^T) / 2 have variance 1/2, so the
  // semicircle radius is 2 sqrt(dim / 2).
  const int dim = 500;
  const auto s = sample_goe_dense(dim, RngStream(5));
  const double radius = 2.0 * std::sqrt(dim * 0.5);
  const auto outside = std::count_if(s.levels().begin(), s.levels().end(),
                                     [&](double e) { return std::abs(e) > radius; });
  CHECK(double(outside) / dim < 0.01);
  const double d = oracle::ks_distance(
      s.levels(), [&](double x) { return semicircle_cdf(x, radius); });
  CHECK(d < 0.05);
}

TEST_CASE("dense GOE nearest-neighbour ratios follow the Wigner ratio law") {
  const auto s = sample_goe_dense(1000, RngStream(6));
  CHECK(ks_to(s, 1, TheoryDist::wigner_ratio(1.0)) < 0.05);
}

TEST_CASE("tridiagonal GOE agrees with the dense sampler") {
  // A single dim-2000 draw gives ~2000 ratios, whose sampling noise alone is
  // comparable to the 0.03 bound; ten independent draws are pooled.
  std::vector<Spectrum> tri, dense;
  for (int i = 0; i < 10; ++i) {
    tri.push_back(sample_goe_tridiagonal(2000, RngStream(700).substream(i)));
    dense.push_back(sample_goe_dense(2000, RngStream(800).substream(i)));
  }
  const auto rt = pooled_ratios(tri, 1);
  const auto rd = pooled_ratios(dense, 1);
  const auto w1 = TheoryDist::wigner_ratio(1.0);
  CHECK(oracle::ks_distance(rt, [&](double r) { return w1.cdf(r); }) < 0.03);
  CHECK(oracle::ks_two_sample(rt, rd) < 0.02);
}

TEST_CASE("tridiagonal GOE is deterministic") {
  const auto a = sample_goe_tridiagonal(3, RngStream(9));
  const auto b = sample_goe_tridiagonal(3, RngStream(9));
  CHECK(a.levels() == b.levels());
  CHECK(a.levels() != sample_goe_tridiagonal(3, RngStream(10)).levels());
}

TEST_CASE("two superposed GOE spectra give beta' = 2 at k = 2") {
  const auto s = sample_composite({EnsembleKind::kGoeTridiagonal, 5000, 2, 31});
  CHECK(ks_to(s, 2, TheoryDist::wigner_ratio(2.0)) < 0.03);
}

TEST_CASE("four superposed GOE spectra give beta' = 4 at k = 4") {
  std::vector<Spectrum> parts;
  for (int i = 0; i < 4; ++i) {
    parts.push_back(sample_goe_tridiagonal(5000, RngStream(44).substream(i)));
  }
  const auto s = superpose(parts);
  CHECK(s.size() == 20000);
  CHECK(ks_to(s, 4, TheoryDist::wigner_ratio(4.0)) < 0.03);
}

TEST_CASE("poisson levels") {
  const int n = 100000;
  const auto s = sample_poisson_levels(n, RngStream(3));
  REQUIRE(s.size() == std::size_t(n));
  CHECK(s[0] == 0.0);
  const double mean_spacing = (s[n - 1] - s[0]) / (n - 1);
  CHECK(std::abs(mean_spacing - 1.0) < 0.01);
  CHECK(ks_to(s, 1, TheoryDist::poisson_hosr(1)) < 0.01);
  CHECK(ks_to(s, 3, TheoryDist::poisson_hosr(3)) < 0.01);
}

TEST_CASE("superpose") {
  const std::vector<Spectrum> two = {make_spectrum({0, 2, 4}, "a"),
                                     make_spectrum({1, 3, 5}, "b")};
  const auto s = superpose(two);
  CHECK(s.levels() == std::vector<double>{0, 1, 2, 3, 4, 5});
  CHECK(s.label().find('a') != std::string::npos);
  CHECK(s.label().find('b') != std::string::npos);

  const std::vector<Spectrum> one = {make_spectrum({0.5, 1.5, 9})};
  CHECK(superpose(one).levels() == one[0].levels());
  CHECK_THROWS_AS(superpose(std::span<const Spectrum>{}), SizeError);
}

TEST_CASE("composite spectra") {
  const auto s = sample_composite({EnsembleKind::kGoeTridiagonal, 5000, 3, 1});
  CHECK(s.size() == 15000);

  const auto p = sample_composite({EnsembleKind::kPoissonLevels, 10000, 5, 2});
  CHECK(p.size() == 50000);
  CHECK(ks_to(p, 1, TheoryDist::poisson_hosr(1)) < 0.02);

  const EnsembleSpec spec{EnsembleKind::kGoeTridiagonal, 5000, 2, 77};
  CHECK(sample_composite(spec).levels() == sample_composite(spec).levels());

  // Block i depends only on (seed, i): the m = 2 levels are a subset of m = 3.
  const auto small = sample_composite({EnsembleKind::kGoeDense, 50, 2, 8});
  const auto big = sample_composite({EnsembleKind::kGoeDense, 50, 3, 8});
  CHECK(std::includes(big.levels().begin(), big.levels().end(),
                      small.levels().begin(), small.levels().end()));
  CHECK(big.label().find("m=3") != std::string::npos);
  CHECK_THROWS_AS(
      sample_composite({EnsembleKind::kGoeTridiagonal, 10, 0, 1}), SizeError);
}
