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
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mubforge/config.hpp"
#include "mubforge/gfp_linear.hpp"
#include "mubforge/heisenberg_weyl.hpp"
#include "mubforge/lagrangian_spread.hpp"
#include "mubforge/number_theory.hpp"
#include "mubforge/report.hpp"

namespace mubforge {

inline std::string matrix_key(const FpMatrix& m) {
  std::string key;
  key.reserve(m.a.size());
  for (int x : m.a) key.push_back(static_cast<char>(x));
  return key;
}

// ---------------------------------------------------------------------------
// PhasedPauli: an exact scalar times a displacement operator,
//   w^e * prod_j X_j^{a_j} * prod_j Z_j^{b_j},
// where w = i and e is mod 4 when p = 2 (conjugation phases of X^a Z^b
// land in <i>), and w = exp(2 pi i / p), e mod p, for odd p.
// ---------------------------------------------------------------------------

struct PhasedPauli {
  int p = 2, n = 1;
  int e = 0;                 // phase exponent mod phase_modulus()
  std::vector<int> ax, bz;   // shift and phase parts, length n each

  PhasedPauli() = default;
  PhasedPauli(int p_, int n_) : p(p_), n(n_), ax(n_, 0), bz(n_, 0) {}

  int phase_modulus() const { return p == 2 ? 4 : p; }
  int phase_scale() const { return p == 2 ? 2 : 1; }  // w^scale = omega_p

  static PhasedPauli from_label(int p, const FpVector& mu, int e = 0) {
    int n = mu.size() / 2;
    PhasedPauli r(p, n);
    for (int j = 0; j < n; ++j) {
      r.ax[j] = mu[j];
      r.bz[j] = mu[n + j];
    }
    r.e = ((e % r.phase_modulus()) + r.phase_modulus()) % r.phase_modulus();
    return r;
  }

  FpVector label() const {
    std::vector<int> v(2 * n);
    for (int j = 0; j < n; ++j) {
      v[j] = ax[j];
      v[n + j] = bz[j];
    }
    return FpVector(p, std::move(v));
  }

  bool is_identity() const {
    if (e != 0) return false;
    for (int j = 0; j < n; ++j)
      if (ax[j] != 0 || bz[j] != 0) return false;
    return true;
  }

  PhasedPauli operator*(const PhasedPauli& o) const {
    PhasedPauli r(p, n);
    long long cross = 0;  // moving Z^b past X^{a'} costs omega^{b . a'}
    for (int j = 0; j < n; ++j) {
      cross += static_cast<long long>(bz[j]) * o.ax[j];
      r.ax[j] = (ax[j] + o.ax[j]) % p;
      r.bz[j] = (bz[j] + o.bz[j]) % p;
    }
    int m = phase_modulus();
    r.e = static_cast<int>(((e + o.e + phase_scale() * cross) % m + m) % m);
    return r;
  }

  PhasedPauli pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    // exponents stay tiny; repeated multiplication keeps phases exact
    // (reducing k mod p would drop the accumulated scalar)
    PhasedPauli r(p, n);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  PhasedPauli inverse() const {
    PhasedPauli r(p, n);
    long long ab = 0;
    for (int j = 0; j < n; ++j) {
      r.ax[j] = (p - ax[j]) % p;
      r.bz[j] = (p - bz[j]) % p;
      ab += static_cast<long long>(ax[j]) * bz[j];
    }
    int m = phase_modulus();
    r.e = static_cast<int>((((-e + phase_scale() * ab) % m) + m) % m);
    return r;
  }

  // entrywise complex conjugate: X -> X, Z -> Z^{-1}, w^e -> w^{-e}
  PhasedPauli conjugated() const {
    PhasedPauli r = *this;
    int m = phase_modulus();
    r.e = (m - e) % m;
    for (int j = 0; j < n; ++j) r.bz[j] = (p - bz[j]) % p;
    return r;
  }

  bool operator==(const PhasedPauli& o) const {
    return p == o.p && n == o.n && e == o.e && ax == o.ax && bz == o.bz;
  }
};

inline CMatrix phased_pauli_matrix(const HWContext& ctx, const PhasedPauli& pp) {
  double angle = 2.0 * std::numbers::pi * pp.e / pp.phase_modulus();
  Complex phase(std::cos(angle), std::sin(angle));
  return phase * displacement_matrix(ctx, pp.label());
}

// ---------------------------------------------------------------------------
// ExtCliffordLabel: an element of the extended Clifford group modulo global
// phase, stored as its exact conjugation action on the 2n displacement
// generators (a phase-tracking tableau) plus an antiunitarity sign.
//
// The induced symplectic part F (columns = image labels) satisfies
// F^T J F = eps J, with eps = -1 flagging antiunitarity (for p = 2 the two
// conditions coincide and eps is independent data). Composition is exact:
// tracking generator-image phases is what keeps the p = 2 group law honest,
// where the bare (F, mu) bookkeeping picks up displacement-valued defects.
// ---------------------------------------------------------------------------

struct ExtCliffordLabel {
  int p = 2, n = 1;
  std::vector<PhasedPauli> img;  // images of X_1..X_n, Z_1..Z_n
  int eps = +1;

  ExtCliffordLabel() = default;

  HWContext context() const { return HWContext(p, n); }

  static ExtCliffordLabel identity(int p, int n) {
    ExtCliffordLabel l;
    l.p = p;
    l.n = n;
    l.eps = +1;
    for (int k = 0; k < 2 * n; ++k)
      l.img.push_back(PhasedPauli::from_label(p, FpVector::unit(p, 2 * n, k)));
    return l;
  }

  /// Complex conjugation in the computational basis: X_j -> X_j,
  /// Z_j -> Z_j^{-1}, antiunitary.
  static ExtCliffordLabel conjugation(int p, int n) {
    ExtCliffordLabel l = identity(p, n);
    l.eps = -1;
    for (int k = 0; k < n; ++k) l.img[n + k] = l.img[n + k].inverse();
    return l;
  }

  static ExtCliffordLabel displacement(int p, int n, const FpVector& mu) {
    ExtCliffordLabel l;
    l.p = p;
    l.n = n;
    l.eps = +1;
    int scale = (p == 2) ? 2 : 1;
    for (int k = 0; k < 2 * n; ++k) {
      FpVector ek = FpVector::unit(p, 2 * n, k);
      l.img.push_back(PhasedPauli::from_label(p, ek, scale * symplectic_product(mu, ek)));
    }
    return l;
  }

  /// Canonical unitary label inducing the symplectic matrix F: generator
  /// image phases are the minimal admissible choice (0 for odd p; the
  /// Hermiticity parity a.b mod 2 when p = 2).
  static ExtCliffordLabel from_symplectic(const FpMatrix& f) {
    if (!is_symplectic(f)) throw std::invalid_argument("from_symplectic: matrix not symplectic");
    int p = f.p, n = f.rows / 2;
    ExtCliffordLabel l;
    l.p = p;
    l.n = n;
    l.eps = +1;
    for (int k = 0; k < 2 * n; ++k) {
      FpVector c = f.col(k);
      int e = 0;
      if (p == 2) {
        int ab = 0;
        for (int j = 0; j < n; ++j) ab += c[j] * c[n + j];
        e = ab % 2;
      }
      l.img.push_back(PhasedPauli::from_label(p, c, e));
    }
    return l;
  }

  /// Canonical antiunitary label inducing the map F (F^T J F = -J for odd p,
  /// symplectic F for p = 2): the unitary lift of F*K composed with
  /// complex conjugation, K = diag(I, -I).
  static ExtCliffordLabel from_antisymplectic(const FpMatrix& f) {
    int p = f.p, n = f.rows / 2;
    FpMatrix k = FpMatrix::identity(p, 2 * n);
    for (int i = 0; i < n; ++i) k.at(n + i, n + i) = p - 1;
    return compose(from_symplectic(f * k), conjugation(p, n));
  }

  static ExtCliffordLabel from_parts(const FpMatrix& f, const FpVector& mu, int eps) {
    int p = f.p, n = f.rows / 2;
    ExtCliffordLabel base = (eps == +1) ? from_symplectic(f) : from_antisymplectic(f);
    return compose(displacement(p, n, mu), base);
  }

  /// Exact conjugation image of a phased Pauli.
  PhasedPauli apply(const PhasedPauli& pp) const {
    PhasedPauli acc(p, n);
    int m = acc.phase_modulus();
    acc.e = (eps == +1) ? pp.e : (m - pp.e) % m;
    for (int j = 0; j < n; ++j) acc = acc * img[j].pow(pp.ax[j]);
    for (int j = 0; j < n; ++j) acc = acc * img[n + j].pow(pp.bz[j]);
    return acc;
  }

  static ExtCliffordLabel compose(const ExtCliffordLabel& a, const ExtCliffordLabel& b) {
    if (a.p != b.p || a.n != b.n) throw std::invalid_argument("label context mismatch");
    ExtCliffordLabel r;
    r.p = a.p;
    r.n = a.n;
    r.eps = a.eps * b.eps;
    r.img.reserve(2 * a.n);
    for (const auto& pp : b.img) r.img.push_back(a.apply(pp));
    return r;
  }

  ExtCliffordLabel inverse() const {
    FpMatrix fi = *mubforge::inverse(symplectic_part());
    ExtCliffordLabel r;
    r.p = p;
    r.n = n;
    r.eps = eps;
    int m = img[0].phase_modulus();
    for (int k = 0; k < 2 * n; ++k) {
      FpVector pre = fi.col(k);
      PhasedPauli probe = PhasedPauli::from_label(p, pre, 0);
      int carried = apply(probe).e;  // this->apply(probe) has label e_k
      int eq = ((-eps * carried) % m + m) % m;
      r.img.push_back(PhasedPauli::from_label(p, pre, eq));
    }
    return r;
  }

  FpMatrix symplectic_part() const {
    FpMatrix f(p, 2 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      FpVector c = img[k].label();
      for (int r = 0; r < 2 * n; ++r) f.at(r, k) = c[r];
    }
    return f;
  }

  /// Displacement part relative to the canonical lift of the symplectic
  /// part: this label equals displacement(mu) * canonical(F, eps).
  FpVector displacement_part() const {
    FpMatrix f = symplectic_part();
    ExtCliffordLabel canon = (eps == +1) ? from_symplectic(f) : from_antisymplectic(f);
    int m = img[0].phase_modulus(), scale = img[0].phase_scale();
    std::vector<int> rhs(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      int diff = ((img[k].e - canon.img[k].e) % m + m) % m;
      if (diff % scale != 0) throw std::logic_error("phase parity mismatch in displacement_part");
      rhs[k] = (diff / scale) % p;
    }
    // solve <mu, F e_k> = rhs_k, i.e. (F^T J^T) mu = rhs
    FpMatrix j = symplectic_form(p, n);
    FpMatrix m2 = f.transpose() * j.transpose();
    FpMatrix mi = *mubforge::inverse(m2);
    return mi * FpVector(p, rhs);
  }

  bool is_identity() const {
    if (eps != +1) return false;
    for (int k = 0; k < 2 * n; ++k) {
      if (img[k].e != 0) return false;
      FpVector c = img[k].label();
      for (int r = 0; r < 2 * n; ++r)
        if (c[r] != (r == k ? 1 : 0)) return false;
    }
    return true;
  }

  bool is_displacement() const {
    for (int k = 0; k < 2 * n; ++k) {
      FpVector c = img[k].label();
      for (int r = 0; r < 2 * n; ++r)
        if (c[r] != (r == k ? 1 : 0)) return false;
    }
    return eps == +1;
  }

  int order(int cap = 100000) const {
    ExtCliffordLabel acc = *this;
    for (int k = 1; k <= cap; ++k) {
      if (acc.is_identity()) return k;
      acc = compose(acc, *this);
    }
    throw std::logic_error("label order exceeds cap");
  }

  ExtCliffordLabel pow(long long k) const {
    ExtCliffordLabel out = identity(p, n);
    if (k < 0) return inverse().pow(-k);
    ExtCliffordLabel base = *this;
    while (k > 0) {
      if (k & 1) out = compose(out, base);
      base = compose(base, base);
      k >>= 1;
    }
    return out;
  }

  std::string key() const {
    std::string s;
    s.reserve(2 + img.size() * (2 * n + 1));
    s.push_back(static_cast<char>(eps == +1 ? 1 : 0));
    for (const auto& pp : img) {
      s.push_back(static_cast<char>(pp.e));
      for (int x : pp.ax) s.push_back(static_cast<char>(x));
      for (int x : pp.bz) s.push_back(static_cast<char>(x));
    }
    return s;
  }

  bool operator==(const ExtCliffordLabel& o) const {
    return p == o.p && n == o.n && eps == o.eps && img == o.img;
  }
  bool operator<(const ExtCliffordLabel& o) const { return key() < o.key(); }
};

inline ExtCliffordLabel conjugate_label(const ExtCliffordLabel& g, const ExtCliffordLabel& h) {
  return ExtCliffordLabel::compose(ExtCliffordLabel::compose(g, h), g.inverse());
}

// ---------------------------------------------------------------------------
// Matrix synthesis. Every label (F, mu, eps) is realized as a concrete
// d x d unitary, plus a "conjugate the input first" flag when eps = -1;
// the realization is checked against the tableau before it is returned.
// ---------------------------------------------------------------------------

struct SynthesizedOperator {
  CMatrix u;
  bool conjugate_first = false;  // operator acts as psi -> u * conj(psi)

  CMatrix act(const CMatrix& m) const {
    // conjugation action on an operator m
    if (!conjugate_first) return u * m * u.adjoint();
    return u * m.conjugate() * u.adjoint();
  }
  CVector act(const CVector& v) const { return conjugate_first ? CVector(u * v.conjugate()) : CVector(u * v); }
};

namespace detail {

inline CMatrix synthesize_unitary_tableau(const ExtCliffordLabel& label) {
  if (label.eps != +1) throw std::logic_error("synthesize_unitary_tableau needs eps=+1");
  HWContext ctx = label.context();
  int d = ctx.dim(), p = ctx.p, n = ctx.n;

  // U|0> is the joint +1 eigenvector of the images of Z_1..Z_n
  CMatrix proj = CMatrix::Identity(d, d);
  for (int k = 0; k < n; ++k) {
    CMatrix g = phased_pauli_matrix(ctx, label.img[n + k]);
    CMatrix avg = CMatrix::Zero(d, d);
    CMatrix pw = CMatrix::Identity(d, d);
    for (int t = 0; t < p; ++t) {
      avg += pw;
      pw = pw * g;
    }
    proj = proj * (avg / static_cast<double>(p));
  }
  CVector psi0;
  bool found = false;
  for (int c = 0; c < d && !found; ++c) {
    CVector v = proj.col(c);
    if (v.norm() > 1e-6) {
      psi0 = v / v.norm();
      found = true;
    }
  }
  if (!found) throw std::logic_error("stabilizer projector is numerically null");

  CMatrix u(d, d);
  for (int r = 0; r < d; ++r) {
    std::vector<int> ds = ctx.digits(r);
    PhasedPauli xr(p, n);
    xr.ax = ds;
    u.col(r) = phased_pauli_matrix(ctx, label.apply(xr)) * psi0;
  }
  return u;
}

}  // namespace detail

inline SynthesizedOperator synthesize_matrix(const ExtCliffordLabel& label) {
  HWContext ctx = label.context();
  SynthesizedOperator out;
  out.conjugate_first = (label.eps == -1);
  ExtCliffordLabel unitary_tab =
      out.conjugate_first
          ? ExtCliffordLabel::compose(label, ExtCliffordLabel::conjugation(label.p, label.n))
          : label;
  out.u = detail::synthesize_unitary_tableau(unitary_tab);

  if (!is_unitary(out.u))
    throw std::logic_error("synthesized matrix failed the unitarity check");
  for (int k = 0; k < 2 * label.n; ++k) {
    FpVector ek = FpVector::unit(label.p, 2 * label.n, k);
    CMatrix gen = displacement_matrix(ctx, ek);
    CMatrix want = phased_pauli_matrix(ctx, label.img[k]);
    if (!approx_equal(out.act(gen), want, 1e-8))
      throw std::logic_error("synthesized matrix does not induce its own tableau");
  }
  return out;
}

/// Recover the label of a Clifford (anti)unitary from its matrix.
inline ExtCliffordLabel label_from_matrix(const HWContext& ctx, const CMatrix& u,
                                          bool antiunitary = false) {
  int d = ctx.dim(), p = ctx.p, n = ctx.n;
  int m = (p == 2) ? 4 : p;
  ExtCliffordLabel label;
  label.p = p;
  label.n = n;
  label.eps = antiunitary ? -1 : +1;
  auto labels = all_labels(ctx);
  for (int k = 0; k < 2 * n; ++k) {
    FpVector ek = FpVector::unit(p, 2 * n, k);
    CMatrix g = displacement_matrix(ctx, ek);
    CMatrix image = antiunitary ? CMatrix(u * g.conjugate() * u.adjoint())
                                : CMatrix(u * g * u.adjoint());
    bool matched = false;
    for (const FpVector& nu : labels) {
      CMatrix dn = displacement_matrix(ctx, nu);
      Complex c = (dn.adjoint() * image).trace() / static_cast<double>(d);
      if (std::abs(std::abs(c) - 1.0) > 1e-6) continue;
      if (max_norm(image - c * dn) > 1e-7) continue;
      double angle = std::arg(c) * m / (2.0 * std::numbers::pi);
      int e = (static_cast<int>(std::llround(angle)) % m + m) % m;
      double check = 2.0 * std::numbers::pi * e / m;
      if (std::abs(c - Complex(std::cos(check), std::sin(check))) > 1e-6)
        throw std::invalid_argument("conjugation phase is not an admissible root of unity");
      label.img.push_back(PhasedPauli::from_label(p, nu, e));
      matched = true;
      break;
    }
    if (!matched) throw std::invalid_argument("matrix does not normalize the displacement group");
  }
  return label;
}

// ---------------------------------------------------------------------------
// LabelGroup: a finite set of labels closed under composition.
// ---------------------------------------------------------------------------

struct LabelGroup {
  int p = 2, n = 1;
  std::vector<ExtCliffordLabel> generators;
  std::vector<ExtCliffordLabel> elements;  // sorted by key

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const ExtCliffordLabel& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    return it != elements.end() && *it == g;
  }
};

inline std::vector<ExtCliffordLabel> close_labels(const std::vector<ExtCliffordLabel>& gens,
                                                  std::size_t cap = SIZE_MAX) {
  std::vector<ExtCliffordLabel> elements;
  std::unordered_set<std::string> seen;
  std::vector<ExtCliffordLabel> frontier;
  ExtCliffordLabel id = ExtCliffordLabel::identity(gens.at(0).p, gens.at(0).n);
  seen.insert(id.key());
  elements.push_back(id);
  frontier.push_back(id);
  std::vector<ExtCliffordLabel> gset = gens;
  for (const auto& g : gens) gset.push_back(g.inverse());
  while (!frontier.empty()) {
    std::vector<ExtCliffordLabel> next;
    for (const auto& x : frontier)
      for (const auto& g : gset) {
        ExtCliffordLabel y = ExtCliffordLabel::compose(x, g);
        if (seen.insert(y.key()).second) {
          if (elements.size() >= cap) throw std::runtime_error("label closure exceeded cap");
          elements.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

inline LabelGroup label_group(const std::vector<ExtCliffordLabel>& gens,
                              std::size_t cap = SIZE_MAX) {
  LabelGroup g;
  g.p = gens.at(0).p;
  g.n = gens.at(0).n;
  g.generators = gens;
  g.elements = close_labels(gens, cap);
  return g;
}

/// Generators of the full Clifford label group: displacement generators
/// plus canonical lifts of the symplectic transvections.
inline std::vector<ExtCliffordLabel> clifford_generators(int p, int n, bool extended = false) {
  std::vector<ExtCliffordLabel> gens;
  for (int k = 0; k < 2 * n; ++k)
    gens.push_back(ExtCliffordLabel::displacement(p, n, FpVector::unit(p, 2 * n, k)));
  for (const FpMatrix& t : symplectic_generators(p, n))
    gens.push_back(ExtCliffordLabel::from_symplectic(t));
  if (extended) gens.push_back(ExtCliffordLabel::conjugation(p, n));
  return gens;
}

inline LabelGroup centralizer(const LabelGroup& group, const LabelGroup& sub) {
  for (const auto& s : sub.generators)
    if (!group.elements.empty() && !group.contains(s))
      throw std::invalid_argument("centralizer: sub is not inside group");
  LabelGroup out;
  out.p = group.p;
  out.n = group.n;
  for (const auto& g : group.elements) {
    bool ok = true;
    for (const auto& s : sub.generators)
      if (!(ExtCliffordLabel::compose(g, s) == ExtCliffordLabel::compose(s, g))) {
        ok = false;
        break;
      }
    if (ok) out.elements.push_back(g);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

inline LabelGroup normalizer(const LabelGroup& group, const LabelGroup& sub) {
  LabelGroup out;
  out.p = group.p;
  out.n = group.n;
  for (const auto& g : group.elements) {
    bool ok = true;
    ExtCliffordLabel gi = g.inverse();
    for (const auto& s : sub.generators)
      if (!sub.contains(ExtCliffordLabel::compose(ExtCliffordLabel::compose(g, s), gi))) {
        ok = false;
        break;
      }
    if (ok) out.elements.push_back(g);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// ---------------------------------------------------------------------------
// Singer cycles: order-(q+1) irreducible elements of Sp(2n, p), built from
// the field tower F_{q^2} = F_p[x]/(f) with f primitive of degree 2n.
// Multiplication by a norm-1 generator preserves an alternating form, which
// is then rotated onto the standard J.
// ---------------------------------------------------------------------------

namespace detail {

using Poly = std::vector<int>;  // coefficients ascending, length = degree of modulus

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;  // modulus degree; f monic, f.back() == 1
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      prod[i + j] = mod_add(prod[i + j], mod_mul(a[i], b[j], p), p);
  for (int d = 2 * k - 2; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = mod_sub(prod[d - k + i], mod_mul(c, f[i], p), p);
  }
  prod.resize(k);
  return prod;
}

inline Poly poly_x_pow_mod(long long e, const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  Poly result(k, 0), base(k, 0);
  result[0] = 1;
  if (k == 1) throw std::invalid_argument("degree must be >= 2");
  base[1] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

inline FpMatrix companion_matrix(const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  FpMatrix c(p, k, k);
  for (int i = 0; i + 1 < k; ++i) c.at(i + 1, i) = 1;
  for (int i = 0; i < k; ++i) c.at(i, k - 1) = mod_sub(0, f[i], p);
  return c;
}

inline bool matrix_has_order(const FpMatrix& m, long long ord) {
  FpMatrix id = FpMatrix::identity(m.p, m.rows);
  if (!(m.pow(ord) == id)) return false;
  for (std::int64_t r : distinct_prime_factors(ord))
    if (m.pow(ord / r) == id) return false;
  return true;
}

// first (in lexicographic coefficient order) primitive polynomial of the
// given degree over F_p
inline Poly primitive_polynomial(int p, int degree) {
  long long group_order = checked_pow(p, degree) - 1;
  long long total = checked_pow(p, degree);
  for (long long idx = 0; idx < total; ++idx) {
    Poly f(degree + 1, 0);
    long long t = idx;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[degree] = 1;
    if (f[0] == 0) continue;
    FpMatrix c = companion_matrix(f, p);
    if (matrix_has_order(c, group_order)) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

}  // namespace detail

inline bool is_irreducible_action(const FpMatrix& f) {
  // the module F_p^{2n} is simple iff every nonzero vector is cyclic
  int k = f.rows, p = f.p;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long long idx = 1; idx < total; ++idx) {
    FpVector v = FpVector::from_index(p, k, idx);
    FpMatrix krylov(p, k, k);
    FpVector w = v;
    for (int i = 0; i < k; ++i) {
      krylov.set_row(i, w);
      w = f * w;
    }
    if (rank(krylov) != k) return false;
  }
  return true;
}

/// Field-tower scaffolding behind a Singer cycle: the cycle itself plus the
/// conjugated multiplication-by-primitive-element and Frobenius maps, whose
/// products exhaust every linear map normalizing the cyclic group generated
/// by the cycle.
struct SingerScaffold {
  int p = 2, n = 1;
  FpMatrix cycle;           // order q+1, irreducible, symplectic
  FpMatrix primitive_mult;  // order q^2-1 (multiplication by a field generator)
  FpMatrix frobenius;       // x -> x^p in the same basis
  long long q = 2;
};

inline SingerScaffold build_singer_scaffold(int p, int n) {
  check_prime(p);
  long long q = checked_pow(p, n);
  int k = 2 * n;
  detail::Poly f = detail::primitive_polynomial(p, k);
  FpMatrix c = detail::companion_matrix(f, p);
  FpMatrix m = c.pow(q - 1);  // multiplication by the norm-one generator

  // invariant alternating forms: solve M^T S M = S over strictly upper
  // triangular unknowns
  int unknowns = k * (k - 1) / 2;
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) positions.emplace_back(i, j);
  FpMatrix constraint(p, unknowns, unknowns);
  for (int u = 0; u < unknowns; ++u) {
    FpMatrix s(p, k, k);
    s.at(positions[u].first, positions[u].second) = 1;
    s.at(positions[u].second, positions[u].first) = p - 1;
    FpMatrix t = m.transpose() * s * m + (-s);
    for (int v = 0; v < unknowns; ++v)
      constraint.at(v, u) = t.at(positions[v].first, positions[v].second);
  }
  FpMatrix kernel = kernel_basis(constraint);
  if (kernel.rows == 0) throw std::logic_error("no invariant alternating form");

  auto build_form = [&](const FpVector& coeffs) {
    FpMatrix s(p, k, k);
    for (int u = 0; u < unknowns; ++u) {
      s.at(positions[u].first, positions[u].second) = coeffs[u];
      s.at(positions[u].second, positions[u].first) = mod_sub(0, coeffs[u], p);
    }
    return s;
  };
  std::optional<FpMatrix> form;
  for (int i = 0; i < kernel.rows && !form; ++i) {
    FpMatrix s = build_form(kernel.row(i));
    if (rank(s) == k) form = s;
  }
  std::mt19937_64 rng(kDefaultSeed);
  for (int tries = 0; tries < 200 && !form; ++tries) {
    FpVector coeffs = FpVector::zero(p, unknowns);
    for (int i = 0; i < kernel.rows; ++i)
      coeffs = coeffs + kernel.row(i) * static_cast<int>(rng() % p);
    FpMatrix s = build_form(coeffs);
    if (rank(s) == k) form = s;
  }
  if (!form) throw std::logic_error("no nondegenerate invariant form found");
  FpMatrix s = *form;

  // hyperbolic basis for S: columns y_1..y_n, x_1..x_n with B^T S B = J
  std::vector<FpVector> pool;
  for (int i = 0; i < k; ++i) pool.push_back(FpVector::unit(p, k, i));
  auto pair_value = [&](const FpVector& a, const FpVector& b) {
    long long acc = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) acc += static_cast<long long>(a[i]) * s.at(i, j) % p * b[j];
    return mod_reduce(acc, p);
  };
  std::vector<FpVector> xs, ys;
  for (int step = 0; step < n; ++step) {
    int xi = -1, yi = -1;
    for (size_t i = 0; i < pool.size() && xi < 0; ++i) {
      if (pool[i].is_zero()) continue;
      for (size_t j = 0; j < pool.size(); ++j) {
        if (i == j || pool[j].is_zero()) continue;
        if (pair_value(pool[i], pool[j]) != 0) {
          xi = static_cast<int>(i);
          yi = static_cast<int>(j);
          break;
        }
      }
    }
    if (xi < 0) throw std::logic_error("degenerate form during basis construction");
    FpVector x = pool[xi];
    FpVector y = pool[yi] * mod_inv(pair_value(x, pool[yi]), p);  // x.S.y = 1
    xs.push_back(x);
    ys.push_back(y);
    std::vector<FpVector> next;
    for (const auto& v : pool) {
      int alpha = pair_value(x, v), beta = pair_value(y, v);
      FpVector w = v + x * beta - y * alpha;
      if (!w.is_zero()) next.push_back(w);
    }
    pool = std::move(next);
  }
  FpMatrix basis(p, k, k);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < k; ++r) {
      basis.at(r, i) = ys[i][r];
      basis.at(r, n + i) = xs[i][r];
    }
  FpMatrix binv = *inverse(basis);

  // Frobenius in the power basis: column i holds x^{i p} mod f
  FpMatrix frob(p, k, k);
  for (int i = 0; i < k; ++i) {
    detail::Poly col = detail::poly_x_pow_mod(static_cast<long long>(i) * p, f, p);
    for (int r = 0; r < k; ++r) frob.at(r, i) = col[r];
  }

  SingerScaffold out;
  out.p = p;
  out.n = n;
  out.q = q;
  out.cycle = binv * m * basis;
  out.primitive_mult = binv * c * basis;
  out.frobenius = binv * frob * basis;

  if (!is_symplectic(out.cycle)) throw std::logic_error("singer cycle is not symplectic");
  if (!detail::matrix_has_order(out.cycle, q + 1)) throw std::logic_error("singer cycle has wrong order");
  if (!is_irreducible_action(out.cycle)) throw std::logic_error("singer cycle action is reducible");
  return out;
}

inline FpMatrix singer_cycle(int p, int n) { return build_singer_scaffold(p, n).cycle; }

inline ExtCliffordLabel singer_unitary(int p, int n) {
  return ExtCliffordLabel::from_symplectic(singer_cycle(p, n));
}

struct NoZsigmondyPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Largest Zsigmondy prime of p^{2n} - 1 (these are the admissible orders of
/// irreducible prime-order cyclic subgroups of Sp(2n, p)).
inline std::int64_t zsigmondy_order(int p, int n) {
  ZsigmondyResult z = zsigmondy_primes(p, 2 * n);
  if (z.exceptional)
    throw NoZsigmondyPrime("p^{2n}-1 has no Zsigmondy prime for p=" + std::to_string(p) +
                           ", n=" + std::to_string(n));
  return z.primes.back();
}

inline ExtCliffordLabel zsigmondy_unitary(int p, int n) {
  std::int64_t r = zsigmondy_order(p, n);
  long long q = checked_pow(p, n);
  ExtCliffordLabel s = singer_unitary(p, n);
  ExtCliffordLabel u = s.pow((q + 1) / r);
  if (u.order() != r) throw std::logic_error("zsigmondy unitary has wrong order");
  return u;
}

// ---------------------------------------------------------------------------
// Normalizers and centralizers of Singer structures. Any invertible map
// normalizing the cyclic group of the Singer cycle is a product
// (field multiplication) x (Frobenius power); the full candidate set is
// filtered against exact symplectic/normalization tests, which keeps the
// computation exhaustive without enumerating Sp itself.
// ---------------------------------------------------------------------------

inline std::vector<FpMatrix> torus_frobenius_candidates(const SingerScaffold& sc) {
  std::vector<FpMatrix> cands;
  std::unordered_set<std::string> seen;
  long long torus_order = sc.q * sc.q - 1;
  FpMatrix cpow = FpMatrix::identity(sc.p, 2 * sc.n);
  for (long long s = 0; s < torus_order; ++s) {
    FpMatrix fpow = FpMatrix::identity(sc.p, 2 * sc.n);
    for (int j = 0; j < 2 * sc.n; ++j) {
      FpMatrix g = cpow * fpow;
      if (seen.insert(matrix_key(g)).second) cands.push_back(std::move(g));
      fpow = fpow * sc.frobenius;
    }
    cpow = cpow * sc.primitive_mult;
  }
  return cands;
}

/// Elements of Sp(2n, p) normalizing <cycle>.
inline std::vector<FpMatrix> singer_normalizer_sp(const SingerScaffold& sc) {
  std::vector<FpMatrix> out;
  std::unordered_set<std::string> powers;
  FpMatrix pw = FpMatrix::identity(sc.p, 2 * sc.n);
  for (long long t = 0; t <= sc.q; ++t) {
    powers.insert(matrix_key(pw));
    pw = pw * sc.cycle;
  }
  for (const FpMatrix& g : torus_frobenius_candidates(sc)) {
    if (!is_symplectic(g)) continue;
    FpMatrix conj = g * sc.cycle * *inverse(g);
    if (powers.count(matrix_key(conj))) out.push_back(g);
  }
  return out;
}

/// Antisymplectic maps normalizing <cycle> (empty for p = 2, where the
/// antiunitary coset reuses the symplectic normalizer).
inline std::vector<FpMatrix> singer_normalizer_antisp(const SingerScaffold& sc) {
  std::vector<FpMatrix> out;
  if (sc.p == 2) return out;
  std::unordered_set<std::string> powers;
  FpMatrix pw = FpMatrix::identity(sc.p, 2 * sc.n);
  for (long long t = 0; t <= sc.q; ++t) {
    powers.insert(matrix_key(pw));
    pw = pw * sc.cycle;
  }
  for (const FpMatrix& g : torus_frobenius_candidates(sc)) {
    if (!is_antisymplectic(g)) continue;
    FpMatrix conj = g * sc.cycle * *inverse(g);
    if (powers.count(matrix_key(conj))) out.push_back(g);
  }
  return out;
}

/// Normalizer of the Singer unitary group inside the (extended, if asked)
/// Clifford label group, via the symplectic-level candidates above crossed
/// with all q^2 displacement parts.
inline LabelGroup singer_unitary_normalizer(const SingerScaffold& sc, bool extended) {
  int p = sc.p, n = sc.n;
  ExtCliffordLabel v = ExtCliffordLabel::from_symplectic(sc.cycle);
  LabelGroup singer = label_group({v});
  std::unordered_set<std::string> singer_keys;
  for (const auto& e : singer.elements) singer_keys.insert(e.key());

  LabelGroup out;
  out.p = p;
  out.n = n;
  HWContext ctx(p, n);
  auto mus = all_labels(ctx);
  auto try_candidates = [&](const std::vector<FpMatrix>& fs, bool anti) {
    for (const FpMatrix& g : fs) {
      ExtCliffordLabel base = anti ? ExtCliffordLabel::from_antisymplectic(g)
                                   : ExtCliffordLabel::from_symplectic(g);
      for (const FpVector& mu : mus) {
        ExtCliffordLabel l =
            ExtCliffordLabel::compose(ExtCliffordLabel::displacement(p, n, mu), base);
        ExtCliffordLabel c = conjugate_label(l, v);
        if (singer_keys.count(c.key())) out.elements.push_back(std::move(l));
      }
    }
  };
  try_candidates(singer_normalizer_sp(sc), false);
  if (extended) {
    if (p == 2)
      try_candidates(singer_normalizer_sp(sc), true);
    else
      try_candidates(singer_normalizer_antisp(sc), true);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Centralizer of the Singer unitary group inside the Clifford label group.
inline LabelGroup singer_unitary_centralizer(const SingerScaffold& sc) {
  int p = sc.p, n = sc.n;
  ExtCliffordLabel v = ExtCliffordLabel::from_symplectic(sc.cycle);
  LabelGroup out;
  out.p = p;
  out.n = n;
  HWContext ctx(p, n);
  auto mus = all_labels(ctx);
  for (const FpMatrix& g : singer_normalizer_sp(sc)) {
    if (!(g * sc.cycle == sc.cycle * g)) continue;
    ExtCliffordLabel base = ExtCliffordLabel::from_symplectic(g);
    for (const FpVector& mu : mus) {
      ExtCliffordLabel l =
          ExtCliffordLabel::compose(ExtCliffordLabel::displacement(p, n, mu), base);
      if (ExtCliffordLabel::compose(l, v) == ExtCliffordLabel::compose(v, l))
        out.elements.push_back(std::move(l));
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small matrix groups, with a bit-packed fast
// path for Sp(2n, 2).
// ---------------------------------------------------------------------------

inline std::vector<FpMatrix> close_matrix_group(const std::vector<FpMatrix>& gens,
                                                std::size_t cap = SIZE_MAX) {
  int p = gens.at(0).p, k = gens.at(0).rows;
  std::vector<FpMatrix> elements;
  std::unordered_set<std::string> seen;
  FpMatrix id = FpMatrix::identity(p, k);
  seen.insert(matrix_key(id));
  elements.push_back(id);
  std::vector<FpMatrix> gset = gens;
  for (const auto& g : gens) gset.push_back(*inverse(g));
  std::size_t head = 0;
  while (head < elements.size()) {
    FpMatrix x = elements[head++];
    for (const auto& g : gset) {
      FpMatrix y = x * g;
      if (seen.insert(matrix_key(y)).second) {
        if (elements.size() >= cap) throw std::runtime_error("matrix closure exceeded cap");
        elements.push_back(std::move(y));
      }
    }
  }
  return elements;
}

namespace gf2 {

// k x k matrix over F_2 packed into a uint64, row r in bits [8r, 8r+8)
inline std::uint64_t pack(const FpMatrix& m) {
  std::uint64_t out = 0;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c)) out |= std::uint64_t{1} << (8 * r + c);
  return out;
}

inline FpMatrix unpack(std::uint64_t x, int k) {
  FpMatrix m(2, k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m.at(r, c) = (x >> (8 * r + c)) & 1;
  return m;
}

inline std::uint64_t identity(int k) {
  std::uint64_t out = 0;
  for (int r = 0; r < k; ++r) out |= std::uint64_t{1} << (8 * r + r);
  return out;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, int k) {
  std::uint64_t out = 0;
  for (int r = 0; r < k; ++r) {
    std::uint64_t bits = (a >> (8 * r)) & 0xffu;
    std::uint64_t row = 0;
    while (bits) {
      int j = std::countr_zero(bits);
      bits &= bits - 1;
      row ^= (b >> (8 * j)) & 0xffu;
    }
    out |= row << (8 * r);
  }
  return out;
}

inline std::uint64_t pow(std::uint64_t a, long long e, int k) {
  std::uint64_t r = identity(k);
  while (e > 0) {
    if (e & 1) r = mul(r, a, k);
    a = mul(a, a, k);
    e >>= 1;
  }
  return r;
}

/// All elements of Sp(2n, 2) (2n <= 8), packed.
inline std::vector<std::uint64_t> enumerate_sp(int n) {
  int k = 2 * n;
  if (k > 8) throw std::invalid_argument("packed enumeration limited to 2n <= 8");
  std::vector<std::uint64_t> gens;
  for (const FpMatrix& g : symplectic_generators(2, n)) gens.push_back(pack(g));
  std::vector<std::uint64_t> elements;
  std::unordered_set<std::uint64_t> seen;
  elements.push_back(identity(k));
  seen.insert(elements[0]);
  std::size_t head = 0;
  while (head < elements.size()) {
    std::uint64_t x = elements[head++];
    for (std::uint64_t g : gens) {
      std::uint64_t y = mul(x, g, k);
      if (seen.insert(y).second) elements.push_back(y);
    }
  }
  return elements;
}

inline long long order(std::uint64_t a, int k, long long cap = 1 << 20) {
  std::uint64_t id = identity(k), x = a;
  for (long long t = 1; t <= cap; ++t) {
    if (x == id) return t;
    x = mul(x, a, k);
  }
  throw std::logic_error("packed order exceeds cap");
}

}  // namespace gf2

/// Number of elements of the given order in Sp(2n, p), by exhaustive scan.
/// Feasible for p^n <= 9 except (2, 4).
inline long long count_sp_elements_of_order(int p, int n, long long ord) {
  long long count = 0;
  if (p == 2) {
    int k = 2 * n;
    for (std::uint64_t x : gf2::enumerate_sp(n))
      if (gf2::order(x, k, 4 * ord) == ord) ++count;
    return count;
  }
  FpMatrix id = FpMatrix::identity(p, 2 * n);
  for (const FpMatrix& x : close_matrix_group(symplectic_generators(p, n))) {
    FpMatrix acc = x;
    long long t = 1;
    while (t <= ord && !(acc == id)) {
      acc = acc * x;
      ++t;
    }
    if (t == ord && acc == id) ++count;
  }
  return count;
}

/// Size of the conjugation orbit of <cycle> under Sp(2n, p). The subgroup is
/// keyed by the sorted matrix keys of its nontrivial elements.
inline long long cyclic_subgroup_conjugacy_orbit_size(int p, int n, const FpMatrix& cycle,
                                                      long long cycle_order) {
  auto subgroup_key = [&](const FpMatrix& gen) {
    std::vector<std::string> keys;
    FpMatrix pw = gen;
    for (long long t = 1; t < cycle_order; ++t) {
      keys.push_back(matrix_key(pw));
      pw = pw * gen;
    }
    std::sort(keys.begin(), keys.end());
    std::string joined;
    for (auto& s : keys) joined += s;
    return joined;
  };
  std::vector<FpMatrix> gens = symplectic_generators(p, n);
  std::vector<FpMatrix> gen_invs;
  for (const auto& g : gens) gen_invs.push_back(*inverse(g));

  std::vector<FpMatrix> orbit = {cycle};
  std::unordered_set<std::string> seen = {subgroup_key(cycle)};
  std::size_t head = 0;
  while (head < orbit.size()) {
    FpMatrix x = orbit[head++];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      FpMatrix y = gens[i] * x * gen_invs[i];
      if (seen.insert(subgroup_key(y)).second) orbit.push_back(std::move(y));
    }
  }
  return static_cast<long long>(orbit.size());
}

// ---------------------------------------------------------------------------
// Verification suites for the Singer / Zsigmondy structure.
// ---------------------------------------------------------------------------

inline Report singer_report(int p, int n) {
  Report rep;
  rep.title = "singer p=" + std::to_string(p) + " n=" + std::to_string(n);
  long long q = checked_pow(p, n);
  SingerScaffold sc = build_singer_scaffold(p, n);
  ExtCliffordLabel v = ExtCliffordLabel::from_symplectic(sc.cycle);

  // order and irreducibility of the cycle and of the unitary label
  rep.add("cycle_order_q_plus_1", detail::matrix_has_order(sc.cycle, q + 1));
  rep.add("cycle_irreducible", is_irreducible_action(sc.cycle));
  rep.add("label_order_q_plus_1", v.order() == q + 1);

  // 1 - F^k invertible for all nontrivial powers; equivalently no nontrivial
  // element of the group commutes with any nontrivial displacement
  {
    bool ok = true;
    FpMatrix id = FpMatrix::identity(p, 2 * n);
    FpMatrix pw = sc.cycle;
    for (long long k = 1; k <= q; ++k) {
      if (rank(id + (-pw)) != 2 * n) ok = false;
      pw = pw * sc.cycle;
    }
    rep.add("one_minus_cycle_invertible", ok);
    bool no_disp = true;
    ExtCliffordLabel lp = v;
    for (long long k = 1; k <= q; ++k) {
      if (lp.is_displacement()) no_disp = false;
      lp = ExtCliffordLabel::compose(lp, v);
    }
    rep.add("no_power_is_displacement", no_disp);
  }

  // order-(q+1) labels correspond exactly to order-(q+1) symplectic parts
  // (exhaustive over the Clifford label group in small dimensions)
  if (q <= 5) {
    auto cliff = close_labels(clifford_generators(p, n));
    bool ok = true;
    for (const auto& g : cliff) {
      if (g.order() != q + 1) continue;
      FpMatrix f = g.symplectic_part();
      if (!detail::matrix_has_order(f, q + 1) || !is_irreducible_action(f)) ok = false;
    }
    rep.add("order_q_plus_1_labels_induce_singer_cycles", ok,
            "exhaustive over " + std::to_string(cliff.size()) + " labels");
  }

  // conjugacy: (a) all order-(q+1) cyclic subgroups of Sp are one orbit;
  // (b) the q^2 displacement twists of the standard unitary are conjugate
  // to it by explicit displacements
  if (q <= 9 && !(p == 2 && n == 4)) {
    long long cycles = count_sp_elements_of_order(p, n, q + 1);
    long long subgroups = cycles / euler_phi(q + 1);
    long long orbit = cyclic_subgroup_conjugacy_orbit_size(p, n, sc.cycle, q + 1);
    rep.add("sp_singer_subgroups_single_class", orbit == subgroups,
            std::to_string(subgroups) + " subgroups, orbit " + std::to_string(orbit));
    rep.add("sp_subgroup_count_matches_index",
            subgroups == symplectic_group_order(p, n) / (2 * n * (q + 1)));

    bool twists_ok = true;
    HWContext ctx(p, n);
    FpMatrix one_minus_f = FpMatrix::identity(p, 2 * n) + (-sc.cycle);
    FpMatrix inv_omf = *inverse(one_minus_f);
    for (const FpVector& mu : all_labels(ctx)) {
      FpVector nu = inv_omf * mu;
      ExtCliffordLabel d = ExtCliffordLabel::displacement(p, n, nu);
      ExtCliffordLabel lhs = conjugate_label(d, v);
      ExtCliffordLabel rhs = ExtCliffordLabel::compose(
          ExtCliffordLabel::displacement(p, n, one_minus_f * nu), v);
      if (!(lhs == rhs)) twists_ok = false;
    }
    rep.add("displacement_twists_conjugate", twists_ok);
  }

  // centralizer of the Singer unitary group is itself
  {
    LabelGroup singer = label_group({v});
    LabelGroup cent = singer_unitary_centralizer(sc);
    bool same = cent.order() == q + 1 && cent.elements.size() == singer.elements.size();
    if (same)
      for (std::size_t i = 0; i < cent.elements.size(); ++i)
        if (!(cent.elements[i] == singer.elements[i])) same = false;
    rep.add("centralizer_is_itself", same, "order " + std::to_string(cent.order()));
    if (q <= 5) {
      LabelGroup cliff;
      cliff.p = p;
      cliff.n = n;
      cliff.generators = {v};
      cliff.elements = close_labels(clifford_generators(p, n));
      LabelGroup cent2 = centralizer(cliff, singer);
      rep.add("centralizer_cross_check", cent2.order() == q + 1);
    }
  }

  // normalizer orders: 2n(q+1) in the Clifford group, doubled when the
  // antiunitary coset is included
  {
    LabelGroup norm = singer_unitary_normalizer(sc, false);
    LabelGroup norm_ext = singer_unitary_normalizer(sc, true);
    rep.add("normalizer_order_2n_q_plus_1", norm.order() == 2 * n * (q + 1),
            "order " + std::to_string(norm.order()));
    rep.add("extended_normalizer_order_doubled", norm_ext.order() == 2 * (2 * n) * (q + 1),
            "order " + std::to_string(norm_ext.order()));
  }

  // trace moduli and eigenvalue nondegeneracy of the synthesized matrices
  {
    CMatrix u = synthesize_matrix(v).u;
    bool traces_ok = true;
    CMatrix pw = u;
    for (long long k = 1; k <= q; ++k) {
      double t2 = std::norm(pw.trace());
      if (std::abs(t2 - 1.0) > 1e-9 * 10) traces_ok = false;
      pw = pw * u;
    }
    rep.add("nontrivial_powers_have_unit_trace_modulus", traces_ok);
    rep.add("eigenvalues_nondegenerate", eigenvalues_nondegenerate(u));
  }
  return rep;
}

inline Report zsigmondy_report(int p, int n) {
  Report rep;
  rep.title = "zsigmondy p=" + std::to_string(p) + " n=" + std::to_string(n);
  long long q = checked_pow(p, n);
  std::int64_t r = zsigmondy_order(p, n);  // throws NoZsigmondyPrime when absent
  SingerScaffold sc = build_singer_scaffold(p, n);
  ExtCliffordLabel v = ExtCliffordLabel::from_symplectic(sc.cycle);
  ExtCliffordLabel u = v.pow((q + 1) / r);

  rep.add("order_is_zsigmondy_prime", u.order() == r, "r=" + std::to_string(r));
  FpMatrix fr = u.symplectic_part();
  rep.add("cycle_power_irreducible", is_irreducible_action(fr));

  if (q <= 9 && !(p == 2 && n == 4)) {
    long long elems = count_sp_elements_of_order(p, n, r);
    long long subgroups = elems / (r - 1);
    long long orbit = cyclic_subgroup_conjugacy_orbit_size(p, n, fr, r);
    rep.add("sp_zsigmondy_subgroups_single_class", orbit == subgroups,
            std::to_string(subgroups) + " subgroups, orbit " + std::to_string(orbit));

    bool twists_ok = true;
    HWContext ctx(p, n);
    FpMatrix one_minus_f = FpMatrix::identity(p, 2 * n) + (-fr);
    FpMatrix inv_omf = *inverse(one_minus_f);
    for (const FpVector& mu : all_labels(ctx)) {
      FpVector nu = inv_omf * mu;
      ExtCliffordLabel d = ExtCliffordLabel::displacement(p, n, nu);
      if (!(conjugate_label(d, u) ==
            ExtCliffordLabel::compose(ExtCliffordLabel::displacement(p, n, one_minus_f * nu), u)))
        twists_ok = false;
    }
    rep.add("displacement_twists_conjugate", twists_ok);
  }

  // centralizer of the Zsigmondy group is the Singer unitary group
  {
    LabelGroup singer = label_group({v});
    HWContext ctx(p, n);
    LabelGroup cent;
    cent.p = p;
    cent.n = n;
    for (const FpMatrix& g : singer_normalizer_sp(sc)) {
      if (!(g * fr == fr * g)) continue;
      ExtCliffordLabel base = ExtCliffordLabel::from_symplectic(g);
      for (const FpVector& mu : all_labels(ctx)) {
        ExtCliffordLabel l =
            ExtCliffordLabel::compose(ExtCliffordLabel::displacement(p, n, mu), base);
        if (ExtCliffordLabel::compose(l, u) == ExtCliffordLabel::compose(u, l))
          cent.elements.push_back(std::move(l));
      }
    }
    std::sort(cent.elements.begin(), cent.elements.end());
    bool same = cent.order() == q + 1;
    if (same)
      for (std::size_t i = 0; i < cent.elements.size(); ++i)
        if (!(cent.elements[i] == singer.elements[i])) same = false;
    rep.add("centralizer_is_singer_group", same, "order " + std::to_string(cent.order()));
  }

  {
    CMatrix um = synthesize_matrix(u).u;
    bool traces_ok = true;
    CMatrix pw = um;
    for (long long k = 1; k < r; ++k) {
      if (std::abs(std::norm(pw.trace()) - 1.0) > 1e-8) traces_ok = false;
      pw = pw * um;
    }
    rep.add("unit_trace_modulus", traces_ok);
  }
  return rep;
}

}  // namespace mubforge
