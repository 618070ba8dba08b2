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

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "hosr/errors.hpp"
#include "hosr/models.hpp"

namespace hosr {

namespace {

void check_sector(int sites, int n_up) {
  if (sites < 2 || sites > 62) {
    throw DomainError("chain length must be in [2, 62], got " +
                      std::to_string(sites));
  }
  if (n_up < 0 || n_up > sites) {
    throw DomainError("n_up must be in [0, L], got " + std::to_string(n_up));
  }
}

std::size_t index_of(const std::vector<std::uint64_t>& basis,
                     std::uint64_t state) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), state);
  return static_cast<std::size_t>(it - basis.begin());
}

struct Bond {
  int i;
  int j;
  double flip;  // amplitude of |..up..down..> <-> |..down..up..>
  double zz;
};

}  // namespace

std::vector<std::uint64_t> sector_basis(int sites, int n_up) {
  check_sector(sites, n_up);
  std::vector<std::uint64_t> out;
  if (n_up == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack enumerates fixed-popcount masks in increasing order.
  std::uint64_t v = (std::uint64_t{1} << n_up) - 1;
  const std::uint64_t limit = std::uint64_t{1} << sites;
  while (v < limit) {
    out.push_back(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

Eigen::MatrixXd build_spin_chain_block(const SpinChainParams& p) {
  check_sector(p.sites, p.n_up);
  if (!(p.eta >= 0.0)) {
    throw DomainError("eta must be >= 0");
  }
  const auto basis = sector_basis(p.sites, p.n_up);
  const auto dim = basis.size();
  std::vector<Bond> bonds;
  for (int i = 0; i + 1 < p.sites; ++i) {
    bonds.push_back({i, i + 1, 0.5 * p.jxy, p.jz});
  }
  if (p.eta != 0.0) {
    for (int i = 0; i + 2 < p.sites; ++i) {
      bonds.push_back({i, i + 2, 0.5 * p.eta * p.jxy2, p.eta * p.jz2});
    }
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::uint64_t s = basis[col];
    for (const auto& b : bonds) {
      const bool up_i = (s >> b.i) & 1U;
      const bool up_j = (s >> b.j) & 1U;
      h(col, col) += b.zz * (up_i == up_j ? 0.25 : -0.25);
      if (up_i != up_j && b.flip != 0.0) {
        const std::uint64_t t =
            s ^ ((std::uint64_t{1} << b.i) | (std::uint64_t{1} << b.j));
        h(index_of(basis, t), col) += b.flip;
      }
    }
  }
  return h;
}

Spectrum spin_chain_spectrum(const SpinChainParams& p) {
  const Eigen::MatrixXd h = build_spin_chain_block(p);
  if (h.rows() < 3) {
    throw SizeError("sector L=" + std::to_string(p.sites) +
                    " n_up=" + std::to_string(p.n_up) + " has dimension " +
                    std::to_string(h.rows()) + " < 3");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("spin chain eigensolver failed (dim " +
                       std::to_string(h.rows()) + ")");
  }
  std::ostringstream label;
  label << "spin-chain L=" << p.sites << " n_up=" << p.n_up
        << " eta=" << p.eta << " Jxy=" << p.jxy << " Jz=" << p.jz
        << " Jxy2=" << p.jxy2 << " Jz2=" << p.jz2;
  const auto& ev = solver.eigenvalues();
  return make_spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()),
                       label.str());
}

std::vector<std::size_t> reflection_permutation(int sites, int n_up) {
  const auto basis = sector_basis(sites, n_up);
  std::vector<std::size_t> image(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    std::uint64_t r = 0;
    for (int i = 0; i < sites; ++i) {
      if ((basis[a] >> i) & 1U) {
        r |= std::uint64_t{1} << (sites - 1 - i);
      }
    }
    image[a] = index_of(basis, r);
  }
  return image;
}

std::vector<std::size_t> spin_flip_permutation(int sites, int n_up) {
  check_sector(sites, n_up);
  if (2 * n_up != sites) {
    throw DomainError("spin flip maps n_up=" + std::to_string(n_up) +
                      " out of its sector for L=" + std::to_string(sites));
  }
  const auto basis = sector_basis(sites, n_up);
  const std::uint64_t all = (std::uint64_t{1} << sites) - 1;
  std::vector<std::size_t> image(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    image[a] = index_of(basis, basis[a] ^ all);
  }
  return image;
}

}  // namespace hosr
