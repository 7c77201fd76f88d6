// Copyright 2026 The fleetmatch Authors
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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fleetmatch::detail {

/// Most frequent value; ties go to the shortest text form, then
/// lexicographic. `to_text` maps a value to something with size() and
/// operator<.
template <typename T, typename ToText>
T mode_value(const std::vector<T>& values, ToText to_text) {
  std::map<T, std::size_t> counts;
  for (const T& v : values) ++counts[v];
  const T* best = nullptr;
  std::size_t best_count = 0;
  for (const auto& [value, count] : counts) {
    if (best == nullptr || count > best_count) {
      best = &value;
      best_count = count;
      continue;
    }
    if (count == best_count) {
      auto cur = to_text(*best);
      auto alt = to_text(value);
      if (alt.size() < cur.size() || (alt.size() == cur.size() && alt < cur)) {
        best = &value;
      }
    }
  }
  return *best;
}

}  // namespace fleetmatch::detail
