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

#include "fleetmatch/decimal.hpp"

#include <random>

#include <doctest.h>

using fleetmatch::Decimal;

TEST_CASE("parse and format round-trip") {
  CHECK(Decimal::parse("645.0")->micro() == 645'000'000);
  CHECK(Decimal::parse("645.0")->str() == "645");
  CHECK(Decimal::parse("0.5")->str() == "0.5");
  CHECK(Decimal::parse("5420")->str() == "5420");
  CHECK(Decimal::parse("2003.25")->str() == "2003.25");
  CHECK(Decimal::parse("  12.5 ")->micro() == 12'500'000);
  CHECK(Decimal::parse("-3.1")->micro() == -3'100'000);
  CHECK(Decimal::parse("0.000001")->micro() == 1);
}

TEST_CASE("parse rejects non-numbers") {
  CHECK(!Decimal::parse(""));
  CHECK(!Decimal::parse("abc"));
  CHECK(!Decimal::parse("12,5"));
  CHECK(!Decimal::parse("1.2.3"));
  CHECK(!Decimal::parse("1e3"));
  CHECK(!Decimal::parse("."));
}

TEST_CASE("seventh fractional digit rounds ties to even") {
  CHECK(Decimal::parse("0.0000005")->micro() == 0);   // 0.5 micro -> 0 (even)
  CHECK(Decimal::parse("0.0000015")->micro() == 2);   // 1.5 micro -> 2
  CHECK(Decimal::parse("0.0000025")->micro() == 2);   // 2.5 micro -> 2
  CHECK(Decimal::parse("0.0000026")->micro() == 3);
  CHECK(Decimal::parse("0.00000251")->micro() == 3);  // above the tie
}

TEST_CASE("sums are exact and order independent") {
  std::mt19937_64 rng(7);
  std::vector<Decimal> values;
  Decimal forward;
  for (int i = 0; i < 1000; ++i) {
    values.push_back(Decimal::from_micro(static_cast<std::int64_t>(rng() % 1'000'000'000)));
    forward += values.back();
  }
  Decimal backward;
  for (auto it = values.rbegin(); it != values.rend(); ++it) backward += *it;
  CHECK(forward == backward);
}

TEST_CASE("scaled applies a factor with rounding to the micro grid") {
  CHECK(Decimal::parse("100")->scaled(0.9) == *Decimal::parse("90"));
  CHECK(Decimal::parse("1.000001")->scaled(1.0) == *Decimal::parse("1.000001"));
}

TEST_CASE("midpoint rounds half micro to even") {
  auto mid = Decimal::midpoint(Decimal::from_micro(1), Decimal::from_micro(2));
  CHECK(mid.micro() == 2);  // 1.5 -> 2
  mid = Decimal::midpoint(Decimal::from_micro(3), Decimal::from_micro(4));
  CHECK(mid.micro() == 4);  // 3.5 -> 4
  mid = Decimal::midpoint(Decimal::from_micro(2), Decimal::from_micro(4));
  CHECK(mid.micro() == 3);
  CHECK(Decimal::midpoint(*Decimal::parse("100"), *Decimal::parse("110")) ==
        *Decimal::parse("105"));
}
