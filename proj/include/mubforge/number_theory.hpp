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
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mubforge {

// b^a with an exact-range guard; desk-scale inputs only.
inline std::int64_t checked_pow(std::int64_t b, int a) {
  std::int64_t r = 1;
  for (int i = 0; i < a; ++i) {
    if (r > (std::int64_t{1} << 62) / b)
      throw std::overflow_error("b^a exceeds the exact integer range");
    r *= b;
  }
  return r;
}

// Trial-division factorization, ascending prime factors (with multiplicity).
inline std::vector<std::int64_t> factorize(std::int64_t n) {
  std::vector<std::int64_t> fs;
  for (std::int64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      fs.push_back(d);
      n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

inline std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  auto fs = factorize(n);
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

inline std::int64_t pow_mod(std::int64_t x, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  x %= m;
  while (e > 0) {
    if (e & 1) r = (__int128{r} * x) % m;
    x = (__int128{x} * x) % m;
    e >>= 1;
  }
  return r;
}

/// Least k >= 1 with x^k = 1 mod m; requires gcd(x, m) = 1.
inline std::int64_t multiplicative_order(std::int64_t x, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  x %= m;
  if (x < 0) x += m;
  if (std::gcd(x, m) != 1) throw std::invalid_argument("multiplicative_order: arguments not coprime");
  // order divides the group order; walk divisors of lambda via the naive
  // approach (values here are tiny)
  std::int64_t k = 1, y = x % m;
  while (y != 1 % m) {
    y = (__int128{y} * x) % m;
    ++k;
    if (k > m) throw std::logic_error("order overflow");
  }
  return k;
}

/// Zsigmondy primes of b^a - 1: primes r | b^a - 1 that divide no b^j - 1
/// for 1 <= j < a (equivalently ord_r(b) = a). `exceptional` records that
/// the set came out empty.
struct ZsigmondyResult {
  std::int64_t b = 0;
  int a = 0;
  std::vector<std::int64_t> primes;  // sorted ascending
  bool exceptional = false;
};

inline ZsigmondyResult zsigmondy_primes(std::int64_t b, int a) {
  if (b < 2 || a < 1) throw std::invalid_argument("zsigmondy_primes needs b >= 2, a >= 1");
  ZsigmondyResult res;
  res.b = b;
  res.a = a;
  std::int64_t value = checked_pow(b, a) - 1;
  for (std::int64_t r : distinct_prime_factors(value)) {
    if (b % r == 0) continue;  // cannot happen for r | b^a - 1, kept as a guard
    if (multiplicative_order(b % r, r) == a) res.primes.push_back(r);
  }
  res.exceptional = res.primes.empty();
  return res;
}

inline bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t r : distinct_prime_factors(n)) result -= result / r;
  return result;
}

}  // namespace mubforge
