// Copyright 2026 The MPRS Authors
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

#ifndef MPRS_PAYOFF_HPP
#define MPRS_PAYOFF_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "mprs/game.hpp"

namespace mprs {

/**
 * Exact value of a deterministic play: 0, +γ^k or -γ^k.
 *
 * Ordering is the numeric order of these values for every γ in (0,1):
 *
 *   Neg(0) < Neg(1) < ... < Zero < ... < Pos(1) < Pos(0)
 *
 * so maximizations never depend on the concrete discount factor.
 */
class PayoffValue {
 public:
  enum class Sign : std::int8_t { kNeg = -1, kZero = 0, kPos = 1 };

  constexpr PayoffValue() = default;

  static constexpr PayoffValue zero() { return PayoffValue(); }
  static constexpr PayoffValue pos(std::uint32_t exponent) {
    return PayoffValue(Sign::kPos, exponent);
  }
  static constexpr PayoffValue neg(std::uint32_t exponent) {
    return PayoffValue(Sign::kNeg, exponent);
  }
  /// q in {-1, 0, 1} as a payoff collected now.
  static constexpr PayoffValue from_turn_payoff(int q) {
    return q > 0 ? pos(0) : q < 0 ? neg(0) : zero();
  }

  constexpr Sign sign() const { return sign_; }
  constexpr std::uint32_t exponent() const { return exponent_; }
  constexpr bool is_zero() const { return sign_ == Sign::kZero; }

  /// γ·value: one more step of discounting. Zero stays zero.
  constexpr PayoffValue discounted() const {
    return is_zero() ? zero() : PayoffValue(sign_, exponent_ + 1);
  }

  /// Sign of the value in {-1, 0, 1}.
  constexpr int qualitative() const { return static_cast<int>(sign_); }

  /// sign × γ^exponent, exactly.
  Rational evaluate(const Rational& gamma) const;

  friend constexpr std::strong_ordering operator<=>(PayoffValue a, PayoffValue b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    switch (a.sign_) {
      case Sign::kPos: return b.exponent_ <=> a.exponent_;
      case Sign::kNeg: return a.exponent_ <=> b.exponent_;
      case Sign::kZero: break;
    }
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(PayoffValue a, PayoffValue b) {
    return (a <=> b) == 0;
  }

 private:
  constexpr PayoffValue(Sign sign, std::uint32_t exponent)
      : sign_(sign), exponent_(exponent) {}

  Sign sign_ = Sign::kZero;
  std::uint32_t exponent_ = 0;
};

/// Named form of the payoff order.
constexpr std::strong_ordering compare_payoffs(PayoffValue a, PayoffValue b) {
  return a <=> b;
}

/// q + γ·next for the payoff combinations a deterministic play can produce.
/// Throws std::logic_error if q is nonzero while `next` is not Zero.
PayoffValue bellman_step(int q, PayoffValue next);

/// Symbolic rendering: "0", "+γ^2", "-γ^0".
std::string to_string(PayoffValue value);

}  // namespace mprs

#endif  // MPRS_PAYOFF_HPP
