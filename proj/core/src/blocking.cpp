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

#include "fleetmatch/blocking.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace fleetmatch {
namespace {

template <typename Record>
void append_keys(const Record& r, std::vector<std::string>& keys) {
  keys.clear();
  keys.push_back(r.country + "\x01" "F" + std::string(to_string(r.fueltype)));
  if (!r.name_key.canonical.empty()) {
    keys.push_back(r.country + "\x01" "N" + r.name_key.canonical);
  }
  for (const std::string& token : r.name_key.tokens) {
    keys.push_back(r.country + "\x01" "T" + token);
    if (token.size() >= 4) {
      keys.push_back(r.country + "\x01" "P" + token.substr(0, 4));
    }
  }
}

template <typename Record>
std::unordered_map<std::string, std::vector<std::uint32_t>> bucketize(
    std::span<const Record> records, std::uint32_t index_offset) {
  std::unordered_map<std::string, std::vector<std::uint32_t>> buckets;
  std::vector<std::string> keys;
  for (std::uint32_t i = 0; i < records.size(); ++i) {
    append_keys(records[i], keys);
    for (std::string& key : keys) {
      buckets[std::move(key)].push_back(i + index_offset);
    }
  }
  return buckets;
}

std::vector<CandidatePair> finalize(std::vector<CandidatePair>&& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return std::move(pairs);
}

template <typename Record>
std::vector<CandidatePair> block_within(std::span<const Record> records) {
  auto buckets = bucketize(records, 0);
  std::vector<CandidatePair> pairs;
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        auto [lo, hi] = std::minmax(members[a], members[b]);
        pairs.emplace_back(lo, hi);
      }
    }
  }
  return finalize(std::move(pairs));
}

}  // namespace

std::vector<CandidatePair> block(std::span<const UnitRecord> records) {
  return block_within(records);
}

std::vector<CandidatePair> block(std::span<const PlantRecord> records) {
  return block_within(records);
}

std::vector<CandidatePair> block_across(std::span<const PlantRecord> left,
                                        std::span<const PlantRecord> right) {
  auto left_buckets = bucketize(left, 0);
  std::vector<CandidatePair> pairs;
  std::vector<std::string> keys;
  for (std::uint32_t j = 0; j < right.size(); ++j) {
    append_keys(right[j], keys);
    for (const std::string& key : keys) {
      auto it = left_buckets.find(key);
      if (it == left_buckets.end()) continue;
      for (std::uint32_t i : it->second) pairs.emplace_back(i, j);
    }
  }
  return finalize(std::move(pairs));
}

}  // namespace fleetmatch
