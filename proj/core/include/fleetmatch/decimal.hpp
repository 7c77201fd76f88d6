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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fleetmatch {

/// Fixed-point decimal with six fractional digits, used for capacities in MW.
/// Sums of Decimal values are exact and associative, so capacity totals are
/// independent of summation order and of worker count.
class Decimal {
 public:
  static constexpr std::int64_t kScale = 1'000'000;  // 1e-6 MW resolution

  constexpr Decimal() = default;

  static constexpr Decimal from_micro(std::int64_t micro) {
    Decimal d;
    d.micro_ = micro;
    return d;
  }

  /// Rounds to the nearest representable value, ties to even.
  static Decimal from_double(double mw);

  /// Parses a plain decimal literal ("645.0", "-3", "0.5"). Digits beyond the
  /// sixth fractional place are rounded (ties to even). Returns nullopt for
  /// anything that is not a decimal number.
  static std::optional<Decimal> parse(std::string_view text);

  constexpr std::int64_t micro() const { return micro_; }
  double to_double() const { return static_cast<double>(micro_) / kScale; }

  /// Minimal textual form: no trailing fractional zeros, no forced ".0".
  std::string str() const;

  constexpr bool is_zero() const { return micro_ == 0; }
  constexpr bool is_positive() const { return micro_ > 0; }

  /// Multiplies by a dimensionless factor, rounding ties to even.
  Decimal scaled(double factor) const;

  friend constexpr Decimal operator+(Decimal a, Decimal b) {
    return from_micro(a.micro_ + b.micro_);
  }
  friend constexpr Decimal operator-(Decimal a, Decimal b) {
    return from_micro(a.micro_ - b.micro_);
  }
  Decimal& operator+=(Decimal other) {
    micro_ += other.micro_;
    return *this;
  }
  friend constexpr auto operator<=>(Decimal, Decimal) = default;

  /// Midpoint of two values; a half-micro result rounds to the even micro.
  static Decimal midpoint(Decimal a, Decimal b);

 private:
  std::int64_t micro_ = 0;
};

}  // namespace fleetmatch
