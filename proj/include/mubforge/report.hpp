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

#include <string>
#include <vector>

namespace mubforge {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    lines.push_back({name, pass, detail});
  }
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

}  // namespace mubforge
