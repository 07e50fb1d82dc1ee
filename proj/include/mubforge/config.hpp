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

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace mubforge {

/// Numerical tolerance for algebraic matrix identities (max-norm).
inline constexpr double kTolNum = 1e-9;

/// Tolerance for squared-overlap (unbiasedness) checks.
inline constexpr double kTolMub = 1e-8;

/// Tolerance for eigenvalue clustering when counting multiplicities.
inline constexpr double kTolEig = 1e-7;

/// Default seed for every pseudo-random draw in the library.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Thread cap, honoring the MUBFORGE_THREADS environment variable.
inline unsigned thread_limit() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MUBFORGE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Run-time options threaded through every entry point; echoed verbatim
/// into report headers so any run can be reproduced from its output.
struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  double tol_num = kTolNum;
  double tol_mub = kTolMub;
  double budget_seconds = 1800.0;
  bool antiunitary = false;
  int spread_index = -1;  // -1 = all / not applicable
  std::string output_format = "json";
};

}  // namespace mubforge
