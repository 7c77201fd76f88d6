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

#include "fleetmatch/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fleetmatch::csv {
namespace {

struct Parser {
  std::string_view text;
  char delimiter;
  std::size_t pos = 0;
  std::size_t line = 1;

  bool done() const { return pos >= text.size(); }

  // Parses one record; returns false at end of input.
  bool next_record(std::vector<std::string>& fields, std::size_t& start_line) {
    fields.clear();
    if (done()) return false;
    start_line = line;

    std::string field;
    bool in_quotes = false;
    while (true) {
      if (done()) {
        fields.push_back(std::move(field));
        return true;
      }
      char c = text[pos];
      if (in_quotes) {
        if (c == '"') {
          if (pos + 1 < text.size() && text[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            in_quotes = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        continue;
      }
      if (c == '"' && field.empty()) {
        in_quotes = true;
        ++pos;
      } else if (c == delimiter) {
        fields.push_back(std::move(field));
        field.clear();
        ++pos;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
        ++pos;
        ++line;
        fields.push_back(std::move(field));
        return true;
      } else {
        field.push_back(c);
        ++pos;
      }
    }
  }
};

bool blank_row(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields[0].empty();
}

}  // namespace

Table Table::read_string(std::string_view text, char delimiter) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }
  Table table;
  Parser parser{text, delimiter};
  std::vector<std::string> fields;
  std::size_t start_line = 0;
  if (!parser.next_record(fields, start_line)) {
    throw std::runtime_error("csv: missing header row");
  }
  table.header_ = fields;
  while (parser.next_record(fields, start_line)) {
    if (blank_row(fields)) continue;
    table.rows_.push_back(Row{std::move(fields), start_line});
    fields = {};
  }
  return table;
}

Table Table::read_file(const std::filesystem::path& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("csv: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_string(buffer.str(), delimiter);
}

std::optional<std::size_t> Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  return std::nullopt;
}

Writer::Writer(std::ostream& out, char delimiter) : out_(out), delimiter_(delimiter) {}

void Writer::write_row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << delimiter_;
    const std::string& f = fields[i];
    bool needs_quotes = f.find(delimiter_) != std::string::npos ||
                        f.find('"') != std::string::npos ||
                        f.find('\n') != std::string::npos ||
                        f.find('\r') != std::string::npos;
    if (needs_quotes) {
      out_ << '"';
      for (char c : f) {
        if (c == '"') out_ << '"';
        out_ << c;
      }
      out_ << '"';
    } else {
      out_ << f;
    }
  }
  out_ << '\n';
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "0";
  return std::string(buf, ptr);
}

}  // namespace fleetmatch::csv
