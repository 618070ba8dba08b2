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

#ifndef HOSR_ENSEMBLES_HPP_
#define HOSR_ENSEMBLES_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "hosr/spectrum.hpp"

namespace hosr {

/// A reproducible random stream identified by (seed, stream id).
///
/// `substream(i)` derives an independent child whose state depends only on
/// the parent identity and `i`, so block i of a composite draws the same
/// numbers no matter how many other blocks exist or in which order they run.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  RngStream substream(std::uint64_t index) const;

  /// Fresh engine positioned at the start of this stream.
  std::mt19937_64 engine() const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

enum class EnsembleKind { kGoeDense, kGoeTridiagonal, kPoissonLevels };

std::string to_string(EnsembleKind kind);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kGoeTridiagonal;
  int dim = 5000;  // levels per block
  int blocks = 1;
  std::uint64_t seed = 0;
};

/// A = (M + M^T) / 2 with M i.i.d. standard normal, drawn from `rng`.
Eigen::MatrixXd goe_dense_matrix(int dim, const RngStream& rng);

/// Eigenvalues of goe_dense_matrix(dim, rng).
Spectrum sample_goe_dense(int dim, const RngStream& rng);

/// Eigenvalues of the beta = 1 Hermite tridiagonal model: diagonal
/// Normal(0, 2), i-th off-diagonal chi with (dim - i) degrees of freedom.
/// Same joint eigenvalue law as the dense sampler up to a global scale.
Spectrum sample_goe_tridiagonal(int dim, const RngStream& rng);

/// Cumulative sums of n unit-mean exponential spacings, starting at 0.
Spectrum sample_poisson_levels(int n, const RngStream& rng);

/// Sorted union of all parts; the label joins the part labels.
Spectrum superpose(std::span<const Spectrum> parts);

/// m independent blocks (block i uses substream i of the spec seed),
/// superposed. Equivalent to diagonalizing the block-diagonal matrix.
Spectrum sample_composite(const EnsembleSpec& spec);

}  // namespace hosr

#endif  // HOSR_ENSEMBLES_HPP_
