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
#include <limits>
#include <random>

#include "hosr/errors.hpp"
#include "hosr/models.hpp"
#include "hosr/theory.hpp"
#include "oracles.hpp"

using namespace hosr;
using doctest::Approx;

namespace {

Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// max |H(pi(a), pi(b)) - H(a, b)|, i.e. ||P H - H P||_max for the
// permutation matrix P sending basis state b to pi(b).
double commutator_max(const Eigen::MatrixXd& h,
                      const std::vector<std::size_t>& pi) {
  double worst = 0.0;
  const auto n = static_cast<std::size_t>(h.rows());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      worst = std::max(worst, std::abs(h(pi[a], pi[b]) - h(a, b)));
    }
  }
  return worst;
}

bool is_permutation_of_range(std::vector<std::size_t> pi) {
  std::sort(pi.begin(), pi.end());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] != i) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("two-site chain") {
  SpinChainParams p{2, 1.0, 0.5, 1.0, 0.5, 0.0, 1};
  const auto h = build_spin_chain_block(p);
  REQUIRE(h.rows() == 2);
  CHECK(h(0, 0) == -0.125);
  CHECK(h(1, 1) == -0.125);
  CHECK(h(0, 1) == 0.5);
  CHECK(h(1, 0) == 0.5);
  const auto ev = sorted_eigenvalues(h);
  CHECK(ev(0) == Approx(-0.625).epsilon(1e-14));
  CHECK(ev(1) == Approx(0.375).epsilon(1e-14));
  CHECK_THROWS_AS(spin_chain_spectrum(p), SizeError);
}

TEST_CASE("sector basis") {
  const auto b = sector_basis(4, 2);
  CHECK(b == std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110, 0b1001,
                                        0b1010, 0b1100});
  CHECK(sector_basis(13, 6).size() == 1716);
  CHECK(sector_basis(12, 6).size() == 924);
  CHECK(sector_basis(5, 0) == std::vector<std::uint64_t>{0});
  CHECK(sector_basis(5, 5) == std::vector<std::uint64_t>{31});
  CHECK_THROWS_AS(sector_basis(5, 6), DomainError);
  CHECK(default_n_up(12) == 6);
  CHECK(default_n_up(13) == 6);
}

TEST_CASE("sector blocks match the full Hilbert-space Hamiltonian") {
  std::mt19937_64 eng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int sites = 3; sites <= 10; ++sites) {
    const double jxy = u(eng), jz = u(eng), jxy2 = u(eng), jz2 = u(eng);
    const double eta = sites % 2 ? 0.0 : 0.7;
    const auto full =
        oracle::full_chain_hamiltonian(sites, jxy, jz, jxy2, jz2, eta);
    CHECK(full.max_imag < 1e-15);

    std::vector<double> union_ev;
    for (int n_up = 0; n_up <= sites; ++n_up) {
      const SpinChainParams p{sites, jxy, jz, jxy2, jz2, eta, n_up};
      const auto h = build_spin_chain_block(p);
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
      const auto basis = sector_basis(sites, n_up);
      Eigen::MatrixXd sub(basis.size(), basis.size());
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          sub(a, b) = full.h(oracle::full_index(basis[a], sites),
                             oracle::full_index(basis[b], sites));
        }
      }
      CHECK((sub - h).cwiseAbs().maxCoeff() < 1e-12);
      const auto ev = sorted_eigenvalues(h);
      const auto ev_sub = sorted_eigenvalues(sub);
      CHECK((ev - ev_sub).cwiseAbs().maxCoeff() < 1e-9);
      union_ev.insert(union_ev.end(), ev.data(), ev.data() + ev.size());
    }
    // The sectors exhaust the full spectrum.
    std::sort(union_ev.begin(), union_ev.end());
    const auto full_ev = sorted_eigenvalues(full.h);
    REQUIRE(union_ev.size() == std::size_t(full_ev.size()));
    double worst = 0.0;
    for (std::size_t i = 0; i < union_ev.size(); ++i) {
      worst = std::max(worst, std::abs(union_ev[i] - full_ev(i)));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("parity and spin flip commute with the block") {
  for (int sites : {6, 7, 12, 13}) {
    for (int n_up : {sites / 2, sites / 2 - 1}) {
      const SpinChainParams p{sites, 1.0, 0.5, 1.0, 0.5, 0.5, n_up};
      const auto h = build_spin_chain_block(p);
      const auto parity = reflection_permutation(sites, n_up);
      CHECK(is_permutation_of_range(parity));
      CHECK(commutator_max(h, parity) < 1e-12);
      if (2 * n_up == sites) {
        const auto flip = spin_flip_permutation(sites, n_up);
        CHECK(is_permutation_of_range(flip));
        CHECK(commutator_max(h, flip) < 1e-12);
      } else {
        CHECK_THROWS_AS(spin_flip_permutation(sites, n_up), DomainError);
      }
    }
  }
}

TEST_CASE("spin chain spectrum") {
  const SpinChainParams p{10, 1.0, 0.5, 1.0, 0.5, 0.5, 5};
  const auto a = spin_chain_spectrum(p);
  const auto b = spin_chain_spectrum(p);
  CHECK(a.size() == 252);
  CHECK(a.levels() == b.levels());
  CHECK(a.label().find("L=10") != std::string::npos);
  CHECK_THROWS_AS(build_spin_chain_block({10, 1, 1, 1, 1, -0.1, 5}),
                  DomainError);
}

TEST_CASE("bessel zeros against the series oracle") {
  CHECK(bessel_zero(0, 1) == Approx(2.404826).epsilon(1e-6));
  CHECK(bessel_zero(1, 1) == Approx(3.831706).epsilon(1e-6));
  CHECK(std::abs(bessel_zero(0, 1) - oracle::bessel_zero_bisect(0, 2.0, 3.0)) <
        1e-9);
  CHECK(std::abs(bessel_zero(1, 1) - oracle::bessel_zero_bisect(1, 3.5, 4.0)) <
        1e-9);
  for (int n = 0; n <= 8; ++n) {
    const auto zs = bessel_zeros(n, 20, 22.0);
    REQUIRE(!zs.empty());
    for (double z : zs) {
      const double ref = oracle::bessel_zero_bisect(n, z - 0.3, z + 0.3);
      CHECK(std::abs(z - ref) <= 1e-9 * ref);
    }
  }
  CHECK_THROWS_AS(bessel_zero(0, 0), DomainError);
}

TEST_CASE("bessel zeros interlace") {
  for (int n = 0; n < 40; ++n) {
    const auto a = bessel_zeros(n, 20, std::numeric_limits<double>::infinity());
    const auto b =
        bessel_zeros(n + 1, 20, std::numeric_limits<double>::infinity());
    REQUIRE(a.size() == 20);
    REQUIRE(b.size() == 20);
    for (int k = 0; k < 20; ++k) {
      CHECK(a[k] < b[k]);
      if (k + 1 < 20) CHECK(b[k] < a[k + 1]);
    }
  }
}

TEST_CASE("circular billiard levels") {
  const BilliardLevels once{3, 3, DegeneracyPolicy::kKeepOnce};
  const auto s = circular_billiard_levels(once);
  const double top = std::pow(bessel_zero(0, 3), 2);
  CHECK(s.levels().back() <= top);
  CHECK(s.levels().back() == top);
  // Oracle count: every j_{n,k} with n <= 3, k <= 3 and j_{n,k} <= j_{0,3}.
  int expected = 0;
  for (int n = 0; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      if (bessel_zero(n, k) <= bessel_zero(0, 3)) ++expected;
    }
  }
  CHECK(s.size() == std::size_t(expected));

  const auto both =
      circular_billiard_levels({3, 3, DegeneracyPolicy::kKeepBoth});
  const auto zeros_n0 = bessel_zeros(0, 3, bessel_zero(0, 3) + 1e-9).size();
  CHECK(both.size() == 2 * s.size() - zeros_n0);

  const auto again = circular_billiard_levels(once);
  CHECK(again.levels() == s.levels());
}

TEST_CASE("circular billiard follows Poisson ratio statistics") {
  const auto all =
      circular_billiard_levels({220, 66, DegeneracyPolicy::kKeepOnce});
  REQUIRE(all.size() >= 5000);
  const auto s = make_spectrum(
      std::vector<double>(all.levels().begin(), all.levels().begin() + 5000));
  for (int k = 1; k <= 4; ++k) {
    const auto d = TheoryDist::poisson_hosr(k);
    const double ks = oracle::ks_distance(spacing_ratios(s, k).values,
                                          [&](double r) { return d.cdf(r); });
    MESSAGE("k=" << k << " KS distance " << ks);
    CHECK(ks < 0.03);
  }
}
