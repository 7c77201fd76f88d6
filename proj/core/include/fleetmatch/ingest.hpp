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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fleetmatch/csv.hpp"
#include "fleetmatch/normalize.hpp"
#include "fleetmatch/record.hpp"
#include "fleetmatch/rescale.hpp"

namespace fleetmatch {

/// Per-source ingest accounting. rows_read always equals
/// rows_kept + rows_dropped_scope + rows_dropped_windsolar + rows_rejected.
struct IngestReport {
  std::string source_id;
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
  std::size_t rows_dropped_scope = 0;
  std::size_t rows_dropped_windsolar = 0;
  std::size_t rows_rejected = 0;
  std::map<std::string, std::size_t> reject_reasons;

  /// Capacity sums over rows whose capacity field parsed, by outcome. For a
  /// net-basis source read equals kept + dropped + rejected exactly.
  Decimal total_capacity_mw;           // kept, after any rescaling
  Decimal capacity_read_mw;            // all parseable rows, as parsed
  Decimal capacity_dropped_mw;         // scope + wind/solar drops
  Decimal capacity_rejected_mw;        // rejected rows with parseable capacity

  /// Units kept despite an in-between operating status ("temporary
  /// shutdown" and the like), for downstream inspection.
  std::vector<std::string> intermediate_status_ids;
};

/// Unmapped vocabulary carries the raw text so source term maps can be
/// extended from the error alone.
class UnmappedTermError : public std::runtime_error {
 public:
  explicit UnmappedTermError(const std::string& term)
      : std::runtime_error("unmapped term '" + term + "'"), term_(term) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

/// Pure dictionary lookup of a raw fuel/technology term. The term is trimmed
/// and lower-cased before lookup; term maps are stored lower-case.
TermTriple translate_term(std::string_view raw, const SourceDescriptor& desc);

/// Parses one source table into standardized records:
///   - columns remapped per desc.column_map
///     (required: name, term, country, capacity, project_id;
///      optional: year, lat, lon, status)
///   - terms translated, countries outside `scope` dropped,
///     wind and solar units dropped, retired units rejected
///   - gross-basis capacities rescaled to net via `factors`
///
/// Malformed rows are rejected per row and show up in the report; the caller
/// is responsible for the file-level read (a missing file is fatal there).
std::pair<std::vector<UnitRecord>, IngestReport> parse_source(
    const csv::Table& table, const SourceDescriptor& desc,
    const std::set<std::string>& scope, const FactorTable& factors,
    const StopTokens& stops);

/// Converts renewable units to single-source matched records and appends
/// them to `matched`. No matching is attempted; a blank name is acceptable
/// here since wind and solar units often have none.
std::pair<std::vector<MatchedRecord>, IngestReport> append_renewables(
    std::vector<MatchedRecord> matched, const csv::Table& renewables,
    const SourceDescriptor& desc, const std::set<std::string>& scope);

}  // namespace fleetmatch
