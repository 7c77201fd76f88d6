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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fleetmatch::csv {

/// One parsed row plus the 1-based line number it started on.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// A delimited table with a header row. Quoting follows RFC 4180: fields may
/// be enclosed in double quotes, quotes are doubled inside, delimiters and
/// newlines are allowed within quoted fields. A UTF-8 BOM is stripped.
class Table {
 public:
  static Table read_file(const std::filesystem::path& path, char delimiter);
  static Table read_string(std::string_view text, char delimiter);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Column index for a header name, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;

 private:
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

/// Streaming writer; always quotes fields that contain the delimiter, quotes
/// or newlines. Rows end with '\n'.
class Writer {
 public:
  Writer(std::ostream& out, char delimiter);
  void write_row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  char delimiter_;
};

/// Shortest round-trip representation of a double, locale-independent.
std::string format_double(double value);

}  // namespace fleetmatch::csv
