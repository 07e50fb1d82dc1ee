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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "mubforge/config.hpp"
#include "mubforge/gfp_linear.hpp"

namespace mubforge {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline double max_norm(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kTolNum) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_norm(a - b) <= tol;
}

inline bool is_unitary(const CMatrix& u, double tol = kTolNum) {
  return approx_equal(u.adjoint() * u, CMatrix::Identity(u.rows(), u.cols()), tol);
}

// a ~ c*b for some unimodular scalar c
inline bool proportional(const CMatrix& a, const CMatrix& b, double tol = kTolNum) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return max_norm(a) <= tol;
  Complex ratio = a(r, c) / b(r, c);
  return approx_equal(a, ratio * b, tol * (1.0 + std::abs(ratio)));
}

// ---------------------------------------------------------------------------
// Contexts: dimension d = p^n with party 1 the slowest (leftmost) tensor
// factor, so basis index r decomposes as base-p digits r = (r_1 ... r_n).
// ---------------------------------------------------------------------------

struct HWContext {
  int p = 2;
  int n = 1;
  HWContext(int p_, int n_) : p(p_), n(n_) {
    check_prime(p);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (dim() > 4096) throw std::invalid_argument("dimension too large");
  }
  int dim() const {
    int d = 1;
    for (int i = 0; i < n; ++i) d *= p;
    return d;
  }
  Complex omega(long long e) const {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(((e % p) + p) % p) / p;
    return {std::cos(angle), std::sin(angle)};
  }
  // digits of a basis index, party 1 first
  std::vector<int> digits(int r) const {
    std::vector<int> ds(n);
    for (int j = n - 1; j >= 0; --j) {
      ds[j] = r % p;
      r /= p;
    }
    return ds;
  }
  int index(const std::vector<int>& ds) const {
    int r = 0;
    for (int j = 0; j < n; ++j) r = r * p + (ds[j] % p + p) % p;
    return r;
  }
};

/// Label of a displacement operator: mu in F_p^{2n}, where the first n
/// entries are per-party shift exponents and the last n per-party phase
/// exponents: D_mu = prod_j X_j^{mu_j} Z_j^{mu_{n+j}}.
struct DisplacementLabel {
  HWContext ctx;
  FpVector mu;
  DisplacementLabel(HWContext c, FpVector m) : ctx(c), mu(std::move(m)) {
    if (mu.p != ctx.p || mu.size() != 2 * ctx.n)
      throw std::invalid_argument("displacement label for the wrong context");
  }
};

// D_mu |r_1..r_n> = prod_j omega^{mu_{n+j} r_j} |r_1+mu_1, .., r_n+mu_n>
inline CMatrix displacement_matrix(const DisplacementLabel& label) {
  const HWContext& ctx = label.ctx;
  int d = ctx.dim(), n = ctx.n, p = ctx.p;
  CMatrix m = CMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    std::vector<int> ds = ctx.digits(r);
    long long phase = 0;
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j) {
      phase += static_cast<long long>(label.mu[n + j]) * ds[j];
      out[j] = (ds[j] + label.mu[j]) % p;
    }
    m(ctx.index(out), r) = ctx.omega(phase);
  }
  return m;
}

inline CMatrix displacement_matrix(const HWContext& ctx, const FpVector& mu) {
  return displacement_matrix(DisplacementLabel(ctx, mu));
}

// D_mu D_nu D_mu^+ D_nu^+ = omega^{<mu,nu>} within tolerance?
inline bool commutation_check(const HWContext& ctx, const FpVector& mu, const FpVector& nu,
                              double tol = kTolNum) {
  CMatrix dm = displacement_matrix(ctx, mu);
  CMatrix dn = displacement_matrix(ctx, nu);
  CMatrix lhs = dm * dn * dm.adjoint() * dn.adjoint();
  int e = symplectic_product(mu, nu);
  CMatrix rhs = ctx.omega(e) * CMatrix::Identity(ctx.dim(), ctx.dim());
  return approx_equal(lhs, rhs, tol);
}

// All p^{2n} labels in index order.
inline std::vector<FpVector> all_labels(const HWContext& ctx) {
  long long total = 1;
  for (int i = 0; i < 2 * ctx.n; ++i) total *= ctx.p;
  std::vector<FpVector> out;
  out.reserve(total);
  for (long long idx = 0; idx < total; ++idx)
    out.push_back(FpVector::from_index(ctx.p, 2 * ctx.n, idx));
  return out;
}

// tr(D_mu^+ D_nu) = d delta_{mu nu} over all label pairs.
inline bool unitary_error_basis_check(const HWContext& ctx, double tol = kTolNum) {
  auto labels = all_labels(ctx);
  int d = ctx.dim();
  std::vector<CMatrix> mats;
  mats.reserve(labels.size());
  for (const auto& mu : labels) mats.push_back(displacement_matrix(ctx, mu));
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = 0; j < mats.size(); ++j) {
      Complex t = (mats[i].adjoint() * mats[j]).trace();
      Complex want = (i == j) ? Complex(d, 0) : Complex(0, 0);
      if (std::abs(t - want) > tol * d) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Eigen-decomposition utilities for unitaries.
// ---------------------------------------------------------------------------

inline std::vector<Complex> unitary_eigenvalues(const CMatrix& u) {
  Eigen::ComplexSchur<CMatrix> schur(u);
  std::vector<Complex> evs(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) evs[i] = schur.matrixT()(i, i);
  return evs;
}

// Greedy clustering of eigenvalues; returns (representative, multiplicity)
// pairs. Two values within `tol` land in the same cluster.
inline std::vector<std::pair<Complex, int>> cluster_eigenvalues(const std::vector<Complex>& evs,
                                                                double tol = kTolEig) {
  std::vector<std::pair<Complex, int>> clusters;
  for (Complex ev : evs) {
    bool placed = false;
    for (auto& [rep, count] : clusters)
      if (std::abs(ev - rep) <= tol) {
        rep = (rep * static_cast<double>(count) + ev) / static_cast<double>(count + 1);
        ++count;
        placed = true;
        break;
      }
    if (!placed) clusters.emplace_back(ev, 1);
  }
  return clusters;
}

inline bool eigenvalues_nondegenerate(const CMatrix& u, double tol = kTolEig) {
  auto clusters = cluster_eigenvalues(unitary_eigenvalues(u), tol);
  return static_cast<Eigen::Index>(clusters.size()) == u.rows();
}

// Haar-ish random unitary via QR of a Gaussian matrix; deterministic in the seed.
inline CMatrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex di = r(i, i);
    q.col(i) *= (std::abs(di) > 0) ? di / std::abs(di) : Complex(1, 0);
  }
  return q;
}

}  // namespace mubforge
