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

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace fleetmatch {

Decimal Decimal::from_double(double mw) {
  // nearbyint honours the default FE_TONEAREST mode: ties to even.
  return from_micro(static_cast<std::int64_t>(std::nearbyint(mw * kScale)));
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  std::size_t n = text.size();
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (n > i && std::isspace(static_cast<unsigned char>(text[n - 1]))) --n;
  if (i >= n) return std::nullopt;

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }

  std::int64_t integral = 0;
  bool any_digit = false;
  for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    any_digit = true;
    if (integral > (INT64_MAX - 9) / 10) return std::nullopt;
    integral = integral * 10 + (text[i] - '0');
  }

  std::int64_t frac = 0;
  int frac_digits = 0;
  int spill_first = -1;  // first digit beyond the supported precision
  bool spill_rest = false;
  if (i < n && text[i] == '.') {
    ++i;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      any_digit = true;
      int digit = text[i] - '0';
      if (frac_digits < 6) {
        frac = frac * 10 + digit;
        ++frac_digits;
      } else if (spill_first < 0) {
        spill_first = digit;
      } else if (digit != 0) {
        spill_rest = true;
      }
    }
  }
  if (!any_digit || i != n) return std::nullopt;

  while (frac_digits < 6) {
    frac *= 10;
    ++frac_digits;
  }
  // Round the spill, ties to even.
  if (spill_first > 5 || (spill_first == 5 && (spill_rest || frac % 2 == 1))) {
    ++frac;
  }

  std::int64_t micro = integral * kScale + frac;
  return from_micro(negative ? -micro : micro);
}

std::string Decimal::str() const {
  std::int64_t v = micro_;
  std::string sign;
  if (v < 0) {
    sign = "-";
    v = -v;
  }
  std::int64_t whole = v / kScale;
  std::int64_t frac = v % kScale;
  std::string out = sign + std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Decimal Decimal::scaled(double factor) const {
  return from_micro(
      static_cast<std::int64_t>(std::nearbyint(static_cast<double>(micro_) * factor)));
}

Decimal Decimal::midpoint(Decimal a, Decimal b) {
  std::int64_t sum = a.micro_ + b.micro_;
  std::int64_t half = sum / 2;
  if (sum % 2 != 0 && half % 2 != 0) {
    half += (sum > 0) ? 1 : -1;
  }
  return from_micro(half);
}

}  // namespace fleetmatch
