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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "mubforge/gfp_linear.hpp"

namespace mubforge {

/// Maximal totally isotropic subspace of F_p^{2n}: dimension n, with the
/// symplectic product vanishing on every pair of members. Labels a maximal
/// abelian subgroup of displacement operators and hence a stabilizer basis.
struct Lagrangian {
  Subspace space;

  int p() const { return space.p(); }
  int n() const { return space.ambient() / 2; }
  bool operator==(const Lagrangian& o) const { return space == o.space; }
  bool operator<(const Lagrangian& o) const { return space < o.space; }
};

inline bool is_isotropic(const Subspace& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (symplectic_product(s.basis.row(i), s.basis.row(j)) != 0) return false;
  return true;
}

inline bool is_lagrangian(const Subspace& s) {
  return s.ambient() % 2 == 0 && s.dim() == s.ambient() / 2 && is_isotropic(s);
}

// Vectors pairing to zero with every basis row of s (the symplectic perp).
inline Subspace symplectic_perp(const Subspace& s) {
  int p = s.p(), amb = s.ambient();
  // rows of M are (J b_i)^T so that M x = 0 <=> <b_i, x> = 0
  FpMatrix j = symplectic_form(p, amb / 2);
  FpMatrix m(p, s.dim(), amb);
  for (int i = 0; i < s.dim(); ++i) {
    FpVector bi = s.basis.row(i);
    for (int c = 0; c < amb; ++c)
      m.at(i, c) = symplectic_product(bi, FpVector::unit(p, amb, c));
  }
  return Subspace::from_rows(kernel_basis(m));
}

/// All Lagrangians of F_p^{2n}, canonically sorted. Count is
/// prod_{i=1..n} (p^i + 1).
inline std::vector<Lagrangian> enumerate_lagrangians(int p, int n) {
  check_prime(p);
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  if (q > 16) throw std::invalid_argument("enumerate_lagrangians: p^n > 16 not supported");
  int amb = 2 * n;

  // grow isotropic subspaces one dimension at a time, deduping on the
  // canonical rref basis
  std::vector<Subspace> level = {Subspace::from_rows(FpMatrix(p, 0, amb))};
  for (int k = 0; k < n; ++k) {
    std::vector<Subspace> next;
    std::unordered_set<std::string> seen;
    for (const Subspace& s : level) {
      Subspace perp = symplectic_perp(s);
      for (const FpVector& v : perp.vectors()) {
        if (v.is_zero() || s.contains(v)) continue;
        FpMatrix rows(p, s.dim() + 1, amb);
        for (int i = 0; i < s.dim(); ++i) rows.set_row(i, s.basis.row(i));
        rows.set_row(s.dim(), v);
        Subspace grown = Subspace::from_rows(rows);
        std::string key(reinterpret_cast<const char*>(grown.basis.a.data()),
                        grown.basis.a.size() * sizeof(int));
        if (seen.insert(key).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Lagrangian> out;
  out.reserve(level.size());
  for (auto& s : level) out.push_back(Lagrangian{std::move(s)});
  std::sort(out.begin(), out.end());
  return out;
}

/// q+1 Lagrangians with pairwise trivial intersection. Their nonzero
/// vectors partition the p^{2n}-1 nonzero labels, so a spread is exactly
/// the label-level skeleton of a complete stabilizer MUB.
struct Spread {
  std::vector<Lagrangian> members;  // sorted canonically

  int p() const { return members.at(0).p(); }
  int n() const { return members.at(0).n(); }
  bool operator==(const Spread& o) const { return members == o.members; }
  bool operator<(const Spread& o) const { return members < o.members; }
};

inline int subspace_intersection_dim(const Subspace& a, const Subspace& b) {
  FpMatrix stacked(a.p(), a.dim() + b.dim(), a.ambient());
  for (int i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis.row(i));
  for (int i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis.row(i));
  return a.dim() + b.dim() - rank(stacked);
}

inline bool is_spread(const std::vector<Lagrangian>& candidate) {
  if (candidate.empty()) return false;
  int p = candidate[0].p(), n = candidate[0].n();
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  for (const auto& l : candidate)
    if (l.p() != p || l.n() != n) throw std::invalid_argument("is_spread: mixed ambient contexts");
  if (static_cast<long long>(candidate.size()) != q + 1) return false;
  for (size_t i = 0; i < candidate.size(); ++i) {
    if (!is_lagrangian(candidate[i].space)) return false;
    for (size_t j = i + 1; j < candidate.size(); ++j)
      if (subspace_intersection_dim(candidate[i].space, candidate[j].space) != 0) return false;
  }
  return true;
}

/// Exhaustive spread enumeration by depth-first search. At every node the
/// branch is forced through the least nonzero vector not yet covered, so
/// each spread is produced exactly once.
inline std::vector<Spread> enumerate_spreads(int p, int n) {
  long long q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  if (q > 8) throw std::invalid_argument("enumerate_spreads: p^n > 8 not supported");
  long long nvec = 1;
  for (int i = 0; i < 2 * n; ++i) nvec *= p;
  if (nvec > 64) throw std::logic_error("vector set exceeds 64 bits");

  std::vector<Lagrangian> lagrangians = enumerate_lagrangians(p, n);
  int count = static_cast<int>(lagrangians.size());

  // bitmask of nonzero member vectors per Lagrangian
  std::vector<std::uint64_t> mask(count, 0);
  for (int i = 0; i < count; ++i)
    for (const FpVector& v : lagrangians[i].space.vectors())
      if (!v.is_zero()) mask[i] |= std::uint64_t{1} << v.index();

  std::vector<std::vector<int>> through(nvec);
  for (int i = 0; i < count; ++i)
    for (long long v = 1; v < nvec; ++v)
      if (mask[i] >> v & 1) through[v].push_back(i);

  std::uint64_t full = 0;
  for (long long v = 1; v < nvec; ++v) full |= std::uint64_t{1} << v;

  std::vector<std::vector<int>> found;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, std::uint64_t covered) -> void {
    if (covered == full) {
      std::vector<int> spread = chosen;
      std::sort(spread.begin(), spread.end());
      found.push_back(std::move(spread));
      return;
    }
    int v = std::countr_zero((~covered) & full);  // least uncovered nonzero vector
    for (int cand : through[v]) {
      if (mask[cand] & covered) continue;
      chosen.push_back(cand);
      self(self, covered | mask[cand]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);

  std::sort(found.begin(), found.end());
  std::vector<Spread> out;
  out.reserve(found.size());
  for (const auto& idxs : found) {
    Spread s;
    for (int i : idxs) s.members.push_back(lagrangians[i]);
    out.push_back(std::move(s));
  }
  return out;
}

// Image of a spread under a (anti)symplectic map, re-canonicalized.
inline Spread apply_map(const FpMatrix& f, const Spread& s) {
  Spread out;
  out.members.reserve(s.members.size());
  for (const auto& l : s.members) out.members.push_back(Lagrangian{apply_map(f, l.space)});
  std::sort(out.members.begin(), out.members.end());
  return out;
}

inline std::string spread_key(const Spread& s) {
  std::string key;
  for (const auto& l : s.members)
    key.append(reinterpret_cast<const char*>(l.space.basis.a.data()),
               l.space.basis.a.size() * sizeof(int));
  return key;
}

}  // namespace mubforge
