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
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace mubforge {

// ---------------------------------------------------------------------------
// Scalar arithmetic mod a prime p. Values are machine ints in [0, p); the
// modulus travels with the containing vector/matrix, never with the scalar.
// ---------------------------------------------------------------------------

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
}

inline int mod_reduce(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int mod_add(int a, int b, int p) { return (a + b) % p; }
inline int mod_sub(int a, int b, int p) { return (a - b + p) % p; }
inline int mod_mul(int a, int b, int p) { return static_cast<int>((static_cast<long long>(a) * b) % p); }

inline int mod_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("inverse of 0 mod p");
  // extended Euclid
  int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p : t;
}

// ---------------------------------------------------------------------------
// FpVector: fixed-length vector over F_p.
// ---------------------------------------------------------------------------

struct FpVector {
  int p = 2;
  std::vector<int> v;

  FpVector() = default;
  FpVector(int p_, std::vector<int> entries) : p(p_), v(std::move(entries)) {
    check_prime(p);
    for (auto& x : v) x = mod_reduce(x, p);
  }
  static FpVector zero(int p, int len) { return FpVector(p, std::vector<int>(len, 0)); }
  static FpVector unit(int p, int len, int k) {
    FpVector e = zero(p, len);
    e.v[k] = 1;
    return e;
  }

  int size() const { return static_cast<int>(v.size()); }
  int operator[](int i) const { return v[i]; }
  int& operator[](int i) { return v[i]; }
  bool is_zero() const {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  }

  FpVector operator+(const FpVector& o) const {
    require_same_context(o);
    FpVector r = *this;
    for (int i = 0; i < size(); ++i) r.v[i] = mod_add(v[i], o.v[i], p);
    return r;
  }
  FpVector operator-(const FpVector& o) const {
    require_same_context(o);
    FpVector r = *this;
    for (int i = 0; i < size(); ++i) r.v[i] = mod_sub(v[i], o.v[i], p);
    return r;
  }
  FpVector operator*(int c) const {
    FpVector r = *this;
    c = mod_reduce(c, p);
    for (auto& x : r.v) x = mod_mul(x, c, p);
    return r;
  }
  FpVector operator-() const { return *this * (p - 1); }
  bool operator==(const FpVector& o) const { return p == o.p && v == o.v; }
  bool operator<(const FpVector& o) const { return v < o.v; }

  int dot(const FpVector& o) const {
    require_same_context(o);
    long long s = 0;
    for (int i = 0; i < size(); ++i) s += static_cast<long long>(v[i]) * o.v[i];
    return mod_reduce(s, p);
  }

  // Rank in the base-p positional order used for vector indexing tables.
  // Component 0 is the most significant digit.
  long long index() const {
    long long idx = 0;
    for (int x : v) idx = idx * p + x;
    return idx;
  }
  static FpVector from_index(int p, int len, long long idx) {
    FpVector r = zero(p, len);
    for (int i = len - 1; i >= 0; --i) {
      r.v[i] = static_cast<int>(idx % p);
      idx /= p;
    }
    return r;
  }

  void require_same_context(const FpVector& o) const {
    if (p != o.p || v.size() != o.v.size())
      throw std::invalid_argument("FpVector context mismatch");
  }
};

// ---------------------------------------------------------------------------
// FpMatrix: dense matrix over F_p, row-major.
// ---------------------------------------------------------------------------

struct FpMatrix {
  int p = 2;
  int rows = 0, cols = 0;
  std::vector<int> a;

  FpMatrix() = default;
  FpMatrix(int p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {
    check_prime(p);
  }
  FpMatrix(int p_, std::vector<std::vector<int>> entries) : p(p_) {
    check_prime(p);
    rows = static_cast<int>(entries.size());
    cols = rows ? static_cast<int>(entries[0].size()) : 0;
    a.reserve(static_cast<size_t>(rows) * cols);
    for (auto& row : entries) {
      if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
      for (int x : row) a.push_back(mod_reduce(x, p));
    }
  }

  static FpMatrix identity(int p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const FpMatrix& o) const {
    return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator<(const FpMatrix& o) const { return a < o.a; }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  }

  FpVector row(int r) const {
    return FpVector(p, std::vector<int>(a.begin() + static_cast<size_t>(r) * cols,
                                        a.begin() + static_cast<size_t>(r + 1) * cols));
  }
  FpVector col(int c) const {
    std::vector<int> out(rows);
    for (int r = 0; r < rows; ++r) out[r] = at(r, c);
    return FpVector(p, std::move(out));
  }
  void set_row(int r, const FpVector& v) {
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
  }

  FpMatrix operator*(const FpMatrix& o) const {
    if (p != o.p || cols != o.rows) throw std::invalid_argument("FpMatrix product mismatch");
    FpMatrix out(p, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        int aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols; ++j)
          out.at(i, j) = mod_add(out.at(i, j), mod_mul(aik, o.at(k, j), p), p);
      }
    return out;
  }
  FpVector operator*(const FpVector& x) const {
    if (p != x.p || cols != x.size()) throw std::invalid_argument("FpMatrix*FpVector mismatch");
    FpVector out = FpVector::zero(p, rows);
    for (int i = 0; i < rows; ++i) {
      long long s = 0;
      for (int j = 0; j < cols; ++j) s += static_cast<long long>(at(i, j)) * x[j];
      out[i] = mod_reduce(s, p);
    }
    return out;
  }
  FpMatrix operator+(const FpMatrix& o) const {
    FpMatrix out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = mod_add(a[i], o.a[i], p);
    return out;
  }
  FpMatrix operator-() const {
    FpMatrix out = *this;
    for (auto& x : out.a) x = (p - x) % p;
    return out;
  }
  FpMatrix operator*(int c) const {
    FpMatrix out = *this;
    c = mod_reduce(c, p);
    for (auto& x : out.a) x = mod_mul(x, c, p);
    return out;
  }
  FpMatrix transpose() const {
    FpMatrix out(p, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
  }
  FpMatrix pow(long long e) const {
    if (rows != cols) throw std::invalid_argument("pow of non-square matrix");
    FpMatrix base = *this, out = identity(p, rows);
    while (e > 0) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }
};

// Reduced row-echelon form; pivots chosen left-to-right, topmost nonzero.
// Deterministic, so it doubles as the canonical form for row spaces.
inline FpMatrix rref(const FpMatrix& m, int* rank_out = nullptr) {
  FpMatrix r = m;
  int p = r.p, lead = 0, rank = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows; ++i)
      if (r.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int c = 0; c < r.cols; ++c) std::swap(r.at(piv, c), r.at(lead, c));
    int inv = mod_inv(r.at(lead, col), p);
    for (int c = 0; c < r.cols; ++c) r.at(lead, c) = mod_mul(r.at(lead, c), inv, p);
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      int f = r.at(i, col);
      if (f == 0) continue;
      for (int c = 0; c < r.cols; ++c)
        r.at(i, c) = mod_sub(r.at(i, c), mod_mul(f, r.at(lead, c), p), p);
    }
    ++lead;
    ++rank;
  }
  if (rank_out) *rank_out = rank;
  return r;
}

inline int rank(const FpMatrix& m) {
  int r = 0;
  rref(m, &r);
  return r;
}

// Gauss-Jordan inverse; nullopt for singular input.
inline std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows, p = m.p;
  FpMatrix aug(p, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  int rk = 0;
  FpMatrix red = rref(aug, &rk);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (red.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  FpMatrix inv(p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

// Basis (as rows) of the right null space {x : Mx = 0}.
inline FpMatrix kernel_basis(const FpMatrix& m) {
  FpMatrix r = rref(m);
  int p = m.p, n = m.cols;
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r.rows; ++i) {
    int c = 0;
    while (c < n && r.at(i, c) == 0) ++c;
    if (c < n) {
      pivot_col_of_row.push_back(c);
      is_pivot[c] = true;
    }
  }
  std::vector<std::vector<int>> rows;
  for (int free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<int> x(n, 0);
    x[free_c] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
      x[pivot_col_of_row[i]] = mod_sub(0, r.at(static_cast<int>(i), free_c), p);
    rows.push_back(std::move(x));
  }
  if (rows.empty()) return FpMatrix(p, 0, n);
  return FpMatrix(p, rows);
}

// ---------------------------------------------------------------------------
// Symplectic structure on F_p^{2n}: J = [[0, -I], [I, 0]].
// ---------------------------------------------------------------------------

inline FpMatrix symplectic_form(int p, int n) {
  FpMatrix j(p, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = p - 1;
    j.at(n + i, i) = 1;
  }
  return j;
}

// mu^T J nu. Equals sum_i (mu_{n+i} nu_i - mu_i nu_{n+i}) mod p.
inline int symplectic_product(const FpVector& mu, const FpVector& nu) {
  mu.require_same_context(nu);
  int len = mu.size();
  if (len % 2 != 0) throw std::invalid_argument("symplectic product needs even length");
  int n = len / 2, p = mu.p;
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    s += static_cast<long long>(mu[n + i]) * nu[i];
    s -= static_cast<long long>(mu[i]) * nu[n + i];
  }
  return mod_reduce(s, p);
}

namespace detail {
inline FpMatrix form_conjugate(const FpMatrix& f) {
  int n2 = f.rows;
  FpMatrix j = symplectic_form(f.p, n2 / 2);
  return f.transpose() * j * f;
}
}  // namespace detail

inline bool is_symplectic(const FpMatrix& f) {
  if (f.rows != f.cols || f.rows % 2 != 0) throw std::invalid_argument("expected 2n x 2n matrix");
  return detail::form_conjugate(f) == symplectic_form(f.p, f.rows / 2);
}

inline bool is_antisymplectic(const FpMatrix& f) {
  if (f.rows != f.cols || f.rows % 2 != 0) throw std::invalid_argument("expected 2n x 2n matrix");
  return detail::form_conjugate(f) == -symplectic_form(f.p, f.rows / 2);
}

// Symplectic transvection x -> x + c<x,v> v.
inline FpMatrix transvection(const FpVector& v, int c = 1) {
  int len = v.size(), p = v.p;
  FpMatrix t = FpMatrix::identity(p, len);
  for (int col = 0; col < len; ++col) {
    // column col is the image of e_col: e_col + c<e_col,v> v
    int coeff = mod_mul(mod_reduce(c, p), symplectic_product(FpVector::unit(p, len, col), v), p);
    for (int r = 0; r < len; ++r)
      t.at(r, col) = mod_add(t.at(r, col), mod_mul(coeff, v[r], p), p);
  }
  return t;
}

// Transvections generate Sp(2n, p); this returns the full set (all nonzero
// v up to scalar, all nonzero c), deduplicated.
inline std::vector<FpMatrix> symplectic_generators(int p, int n) {
  std::vector<FpMatrix> gens;
  std::unordered_set<std::string> seen;
  long long total = 1;
  for (int i = 0; i < 2 * n; ++i) total *= p;
  for (long long idx = 1; idx < total; ++idx) {
    FpVector v = FpVector::from_index(p, 2 * n, idx);
    // normalize to first nonzero entry = 1 so scalar multiples collapse
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    for (int c = 1; c < p; ++c) {
      FpMatrix t = transvection(v, c);
      std::string key(reinterpret_cast<const char*>(t.a.data()), t.a.size() * sizeof(int));
      if (seen.insert(key).second) gens.push_back(std::move(t));
    }
  }
  return gens;
}

// |Sp(2n,p)| = p^{n^2} * prod_{i=1..n} (p^{2i} - 1)
inline long long symplectic_group_order(int p, int n) {
  long long order = 1;
  for (int i = 0; i < n * n; ++i) order *= p;
  long long q2i = 1;
  for (int i = 1; i <= n; ++i) {
    q2i *= static_cast<long long>(p) * p;
    order *= (q2i - 1);
  }
  return order;
}

// ---------------------------------------------------------------------------
// Subspace: a row space stored by its unique RREF basis. Equality and
// ordering are bit-exact on the canonical form.
// ---------------------------------------------------------------------------

struct Subspace {
  FpMatrix basis;  // rref, zero rows dropped; basis.cols = ambient dimension

  Subspace() = default;
  static Subspace from_rows(const FpMatrix& rows) {
    int rk = 0;
    FpMatrix r = rref(rows, &rk);
    Subspace s;
    s.basis = FpMatrix(r.p, rk, r.cols);
    for (int i = 0; i < rk; ++i)
      for (int j = 0; j < r.cols; ++j) s.basis.at(i, j) = r.at(i, j);
    return s;
  }
  static Subspace from_vectors(int p, const std::vector<FpVector>& vecs, int ambient) {
    FpMatrix m(p, static_cast<int>(vecs.size()), ambient);
    for (size_t i = 0; i < vecs.size(); ++i) m.set_row(static_cast<int>(i), vecs[i]);
    return from_rows(m);
  }

  int dim() const { return basis.rows; }
  int ambient() const { return basis.cols; }
  int p() const { return basis.p; }

  bool contains(const FpVector& x) const {
    // x is in the row space iff appending it does not raise the rank
    FpMatrix m(basis.p, basis.rows + 1, basis.cols);
    m.a.assign(basis.a.begin(), basis.a.end());
    m.a.resize(static_cast<size_t>(basis.rows + 1) * basis.cols);
    for (int j = 0; j < basis.cols; ++j) m.at(basis.rows, j) = x[j];
    return rank(m) == basis.rows;
  }

  // All p^dim member vectors, in deterministic coefficient order.
  std::vector<FpVector> vectors() const {
    std::vector<FpVector> out;
    long long total = 1;
    for (int i = 0; i < dim(); ++i) total *= p();
    out.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
      FpVector coeff = FpVector::from_index(p(), dim(), idx);
      FpVector x = FpVector::zero(p(), ambient());
      for (int i = 0; i < dim(); ++i) x = x + basis.row(i) * coeff[i];
      out.push_back(std::move(x));
    }
    return out;
  }

  bool operator==(const Subspace& o) const { return basis == o.basis; }
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis.a < o.basis.a;
  }
};

// Image of a row-space under the linear map F (applied to each basis vector),
// re-canonicalized.
inline Subspace apply_map(const FpMatrix& f, const Subspace& s) {
  FpMatrix m(s.p(), s.dim(), s.ambient());
  for (int i = 0; i < s.dim(); ++i) m.set_row(i, f * s.basis.row(i));
  return Subspace::from_rows(m);
}

}  // namespace mubforge
