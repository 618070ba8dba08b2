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

#ifndef HOSR_MODELS_HPP_
#define HOSR_MODELS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hosr/spectrum.hpp"

namespace hosr {

// ---------------------------------------------------------------------------
// Spin-1/2 chain with nearest and next-nearest XXZ couplings, open boundary:
//
//   H = sum_{i<L}   Jxy (Sx Sx + Sy Sy)_{i,i+1} + Jz  Sz_i Sz_{i+1}
//     + eta sum_{i<L-1} Jxy2 (Sx Sx + Sy Sy)_{i,i+2} + Jz2 Sz_i Sz_{i+2}
//
// Total Sz is conserved; one block is built for a fixed number of up spins.
// ---------------------------------------------------------------------------

struct SpinChainParams {
  int sites = 13;
  double jxy = 1.0;
  double jz = 0.5;
  double jxy2 = 1.0;
  double jz2 = 0.5;
  double eta = 0.5;
  int n_up = 6;
};

/// Half filling for even L, (L-1)/2 up spins for odd L.
inline int default_n_up(int sites) { return sites / 2; }

/// Occupation-basis states (bit i set = site i up) with exactly n_up bits,
/// ascending.
std::vector<std::uint64_t> sector_basis(int sites, int n_up);

/// Real symmetric block in the basis returned by sector_basis().
Eigen::MatrixXd build_spin_chain_block(const SpinChainParams& p);

/// Sorted eigenvalues of the block. Throws SizeError when the sector has
/// fewer than 3 states.
Spectrum spin_chain_spectrum(const SpinChainParams& p);

/// Permutation image of each basis index under site reflection i -> L-1-i.
std::vector<std::size_t> reflection_permutation(int sites, int n_up);

/// Permutation image under flipping every spin. Only maps the sector to
/// itself when n_up == sites - n_up; throws DomainError otherwise.
std::vector<std::size_t> spin_flip_permutation(int sites, int n_up);

// ---------------------------------------------------------------------------
// Circular billiard (unit disk, Dirichlet): levels are squared Bessel zeros.
// ---------------------------------------------------------------------------

enum class DegeneracyPolicy { kKeepOnce, kKeepBoth };

struct BilliardLevels {
  int max_order = 0;        // angular orders n = 0..max_order
  int zeros_per_order = 1;  // radial zeros k = 1..zeros_per_order
  DegeneracyPolicy policy = DegeneracyPolicy::kKeepOnce;
};

/// Positive zeros of J_n in increasing order: at most `max_count` of them and
/// none above `upper` (pass infinity for no bound). Zeros are bracketed by a
/// sign scan with step 0.5 (consecutive zeros are more than 2.4 apart) and
/// bisected to 1e-14 relative width.
std::vector<double> bessel_zeros(int n, int max_count, double upper);

/// k-th positive zero j_{n,k} (k >= 1).
double bessel_zero(int n, int k);

/// E = j_{n,k}^2 for n <= max_order, k <= zeros_per_order, keeping only
/// E <= j_{0,zeros_per_order}^2 so the top of the spectrum is complete.
/// n > 0 levels are doubly degenerate; `policy` decides how many copies to
/// keep.
Spectrum circular_billiard_levels(const BilliardLevels& b);

}  // namespace hosr

#endif  // HOSR_MODELS_HPP_
