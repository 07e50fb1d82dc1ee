// Copyright 2026 The mubforge authors
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

#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "mubforge/config.hpp"
#include "mubforge/heisenberg_weyl.hpp"
#include "mubforge/lagrangian_spread.hpp"

namespace mubforge {

/// Common eigenbasis of the maximal abelian displacement subgroup labeled by
/// a Lagrangian. Column phases are not normalized; downstream logic treats
/// states as rank-1 projectors throughout.
struct StabilizerBasis {
  Lagrangian lagrangian;
  CMatrix vectors;  // d x d, columns are the basis states

  int dim() const { return static_cast<int>(vectors.rows()); }
};

/// Simultaneously diagonalizes the displacement operators of a Lagrangian by
/// diagonalizing a random Hermitian combination of its n generators. The
/// default seed makes the eigenvector phases reproducible; a draw is redrawn
/// whenever the combined spectrum fails to split all d joint eigenspaces.
inline StabilizerBasis stabilizer_basis(const Lagrangian& lagr,
                                        std::uint64_t seed = kDefaultSeed) {
  HWContext ctx(lagr.p(), lagr.n());
  int d = ctx.dim(), n = lagr.n();
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(displacement_matrix(ctx, lagr.space.basis.row(i)));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    CMatrix h = CMatrix::Zero(d, d);
    for (const CMatrix& m : gens) {
      double c = unif(rng), cp = unif(rng);
      h += c * (m + m.adjoint());
      h += Complex(0, 1) * cp * (m - m.adjoint());
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    bool split = true;
    for (int i = 0; i + 1 < d; ++i)
      if (solver.eigenvalues()(i + 1) - solver.eigenvalues()(i) < 1e-6) {
        split = false;
        break;
      }
    if (!split) continue;

    StabilizerBasis basis{lagr, solver.eigenvectors()};
    // every generator must act by a scalar on every column
    for (const CMatrix& m : gens)
      for (int c = 0; c < d; ++c) {
        CVector v = basis.vectors.col(c);
        CVector w = m * v;
        Complex lambda = v.dot(w);
        if ((w - lambda * v).norm() > 1e-8)
          throw std::logic_error("joint eigenspace is degenerate for a Lagrangian");
      }
    return basis;
  }
  throw std::logic_error("failed to split the joint eigenspaces");
}

inline bool is_mutually_unbiased(const StabilizerBasis& b1, const StabilizerBasis& b2,
                                 double tol = kTolMub) {
  if (b1.dim() != b2.dim()) throw std::invalid_argument("dimension mismatch");
  int d = b1.dim();
  double want = 1.0 / d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Complex ov = b1.vectors.col(i).dot(b2.vectors.col(j));
      if (std::abs(std::norm(ov) - want) > tol) return false;
    }
  return true;
}

/// A complete MUB assembled from a spread: q+1 stabilizer bases, q(q+1)
/// states in total.
struct MUBSet {
  Spread spread;
  std::vector<StabilizerBasis> bases;

  int dim() const { return bases.at(0).dim(); }
  int state_count() const { return dim() * static_cast<int>(bases.size()); }
  const CMatrix& basis(int b) const { return bases.at(b).vectors; }
  CVector state(int idx) const {
    int d = dim();
    return bases.at(idx / d).vectors.col(idx % d);
  }
};

inline MUBSet build_mub(const Spread& spread, std::uint64_t seed = kDefaultSeed) {
  MUBSet mub;
  mub.spread = spread;
  mub.bases.reserve(spread.members.size());
  for (const auto& lagr : spread.members) mub.bases.push_back(stabilizer_basis(lagr, seed));
  for (size_t i = 0; i < mub.bases.size(); ++i)
    for (size_t j = i + 1; j < mub.bases.size(); ++j)
      if (!is_mutually_unbiased(mub.bases[i], mub.bases[j]))
        throw std::logic_error("spread produced a non-unbiased basis pair");
  return mub;
}

/// Does the displacement group permute each basis setwise (up to phases)?
inline bool displacement_covariance_check(const StabilizerBasis& basis, double tol = kTolMub) {
  HWContext ctx(basis.lagrangian.p(), basis.lagrangian.n());
  int d = basis.dim();
  for (const FpVector& nu : all_labels(ctx)) {
    CMatrix m = displacement_matrix(ctx, nu);
    for (int c = 0; c < d; ++c) {
      CVector image = m * basis.vectors.col(c);
      bool matched = false;
      for (int t = 0; t < d && !matched; ++t)
        if (std::abs(std::norm(basis.vectors.col(t).dot(image)) - 1.0) < tol) matched = true;
      if (!matched) return false;
    }
  }
  return true;
}

}  // namespace mubforge
