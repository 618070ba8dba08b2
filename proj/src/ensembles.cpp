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

#include "hosr/ensembles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iterator>

#include "hosr/errors.hpp"
#include "hosr/parallel.hpp"

namespace hosr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_dim(int dim, const char* what) {
  if (dim < 3) {
    throw SizeError(std::string(what) + " needs dim >= 3, got " +
                    std::to_string(dim));
  }
}

std::string stream_tag(const RngStream& rng) {
  return "seed=" + std::to_string(rng.seed()) +
         " stream=" + std::to_string(rng.stream());
}

}  // namespace

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(seed_, splitmix64(stream_ ^ splitmix64(index + 1)));
}

std::mt19937_64 RngStream::engine() const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                    static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(stream_),
                    static_cast<std::uint32_t>(stream_ >> 32)};
  return std::mt19937_64(seq);
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::kGoeDense:
      return "goe-dense";
    case EnsembleKind::kGoeTridiagonal:
      return "goe-tridiagonal";
    case EnsembleKind::kPoissonLevels:
      return "poisson";
  }
  return "unknown";
}

Eigen::MatrixXd goe_dense_matrix(int dim, const RngStream& rng) {
  check_dim(dim, "dense GOE");
  auto eng = rng.engine();
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = normal(eng);
    }
  }
  return 0.5 * (m + m.transpose());
}

Spectrum sample_goe_dense(int dim, const RngStream& rng) {
  const Eigen::MatrixXd a = goe_dense_matrix(dim, rng);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("dense GOE eigensolver failed (dim " +
                       std::to_string(dim) + ", " + stream_tag(rng) + ")");
  }
  const auto& ev = solver.eigenvalues();
  return make_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()),
                       "goe-dense dim=" + std::to_string(dim) + " " +
                           stream_tag(rng));
}

Spectrum sample_goe_tridiagonal(int dim, const RngStream& rng) {
  check_dim(dim, "tridiagonal GOE");
  auto eng = rng.engine();
  std::normal_distribution<double> normal(0.0, std::sqrt(2.0));
  Eigen::VectorXd diag(dim);
  Eigen::VectorXd sub(dim - 1);
  for (int i = 0; i < dim; ++i) {
    diag(i) = normal(eng);
  }
  for (int i = 0; i < dim - 1; ++i) {
    std::chi_squared_distribution<double> chi2(dim - 1 - i);
    sub(i) = std::sqrt(chi2(eng));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("tridiagonal GOE eigensolver failed (dim " +
                       std::to_string(dim) + ", " + stream_tag(rng) + ")");
  }
  const auto& ev = solver.eigenvalues();
  return make_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()),
                       "goe-tridiagonal dim=" + std::to_string(dim) + " " +
                           stream_tag(rng));
}

Spectrum sample_poisson_levels(int n, const RngStream& rng) {
  check_dim(n, "poisson levels");
  auto eng = rng.engine();
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> levels(n);
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    levels[i] = e;
    e += expo(eng);
  }
  return make_spectrum(std::move(levels), "poisson n=" + std::to_string(n) +
                                              " " + stream_tag(rng));
}

Spectrum superpose(std::span<const Spectrum> parts) {
  if (parts.empty()) {
    throw SizeError("superpose needs at least one part");
  }
  if (parts.size() == 1) {
    return parts.front();
  }
  std::vector<double> merged;
  std::size_t total = 0;
  for (const auto& p : parts) {
    total += p.size();
  }
  merged.reserve(total);
  std::string label = "superpose[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto mid = merged.size();
    merged.insert(merged.end(), parts[i].levels().begin(),
                  parts[i].levels().end());
    std::inplace_merge(merged.begin(), merged.begin() + mid, merged.end());
    label += (i == 0 ? "" : " | ") + parts[i].label();
  }
  label += "]";
  return make_spectrum(std::move(merged), std::move(label));
}

Spectrum sample_composite(const EnsembleSpec& spec) {
  check_dim(spec.dim, "composite block");
  if (spec.blocks < 1) {
    throw SizeError("composite needs at least one block");
  }
  const RngStream root(spec.seed);
  auto parts = detail::parallel_map(
      static_cast<std::size_t>(spec.blocks), [&](std::size_t i) {
        const auto rng = root.substream(i);
        switch (spec.kind) {
          case EnsembleKind::kGoeDense:
            return sample_goe_dense(spec.dim, rng);
          case EnsembleKind::kGoeTridiagonal:
            return sample_goe_tridiagonal(spec.dim, rng);
          case EnsembleKind::kPoissonLevels:
            break;
        }
        return sample_poisson_levels(spec.dim, rng);
      });
  auto merged = superpose(parts);
  return make_spectrum(
      std::vector<double>(merged.levels()),
      to_string(spec.kind) + " dim=" + std::to_string(spec.dim) +
          " m=" + std::to_string(spec.blocks) +
          " seed=" + std::to_string(spec.seed));
}

}  // namespace hosr
