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

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fleetmatch {

/// Stop tokens removed from canonical names: legal suffixes and generic
/// plant words across the languages of the covered registries. The list is
/// part of the pipeline configuration; this type just holds it.
class StopTokens {
 public:
  StopTokens() = default;
  explicit StopTokens(const std::vector<std::string>& tokens);

  bool contains(std::string_view token) const;

  /// The built-in multilingual default list.
  static const std::vector<std::string>& default_tokens();
  static const StopTokens& defaults();

 private:
  std::unordered_set<std::string> tokens_;
};

/// Canonical form of a plant or unit name: lower-cased, diacritics folded to
/// base letters, punctuation collapsed to single spaces, stop tokens removed,
/// trimmed. Returns an empty string when nothing survives; callers treat that
/// as a normalization failure.
///
/// Idempotent and independent of the record's source.
std::string canonical_name(std::string_view raw, const StopTokens& stops);

/// Splits an already-canonical name into its space-separated tokens.
std::vector<std::string> name_tokens(std::string_view canonical);

/// Cached comparison view of a name: canonical form plus its sorted, unique
/// tokens. Built once at ingest so pair scoring never re-normalizes.
struct NameKey {
  std::string canonical;
  std::vector<std::string> tokens;  // sorted, unique
};

NameKey make_name_key(std::string_view raw, const StopTokens& stops);

}  // namespace fleetmatch
