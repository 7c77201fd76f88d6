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

#include <sstream>

#include <doctest.h>

using namespace fleetmatch;

TEST_CASE("reads a plain comma table") {
  auto table = csv::Table::read_string("a,b,c\n1,2,3\n4,5,6\n", ',');
  CHECK(table.header() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(table.rows().size() == 2);
  CHECK(table.rows()[0].fields == std::vector<std::string>{"1", "2", "3"});
  CHECK(table.rows()[1].line == 3);
}

TEST_CASE("semicolon delimiter and CRLF") {
  auto table = csv::Table::read_string("x;y\r\n1;2\r\n", ';');
  REQUIRE(table.rows().size() == 1);
  CHECK(table.rows()[0].fields == std::vector<std::string>{"1", "2"});
}

TEST_CASE("quoted fields with embedded delimiter, quote and newline") {
  auto table = csv::Table::read_string(
      "name,note\n\"Plant, big\",\"said \"\"ok\"\"\"\n\"two\nlines\",x\n", ',');
  REQUIRE(table.rows().size() == 2);
  CHECK(table.rows()[0].fields[0] == "Plant, big");
  CHECK(table.rows()[0].fields[1] == "said \"ok\"");
  CHECK(table.rows()[1].fields[0] == "two\nlines");
}

TEST_CASE("strips a UTF-8 BOM") {
  auto table = csv::Table::read_string("\xEF\xBB\xBFh1,h2\na,b\n", ',');
  CHECK(table.header()[0] == "h1");
}

TEST_CASE("column lookup") {
  auto table = csv::Table::read_string("Name,Capacity\nX,1\n", ',');
  CHECK(table.column("Capacity") == 1);
  CHECK(!table.column("Missing"));
}

TEST_CASE("writer quotes only when needed and round-trips") {
  std::ostringstream out;
  csv::Writer writer(out, ',');
  writer.write_row({"plain", "with,comma", "with\"quote", "with\nnewline"});
  auto table = csv::Table::read_string(out.str() + "1,2,3,4\n", ',');
  CHECK(table.header() ==
        std::vector<std::string>{"plain", "with,comma", "with\"quote", "with\nnewline"});
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(csv::format_double(51.96262) == "51.96262");
  CHECK(csv::format_double(0.5) == "0.5");
  CHECK(csv::format_double(1.0 / 3.0) == "0.3333333333333333");
}
