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

#include "mprs/payoff.hpp"

#include <stdexcept>

namespace mprs {

Rational PayoffValue::evaluate(const Rational& gamma) const {
  if (is_zero()) return Rational(0);
  Rational power(1);
  for (std::uint32_t k = 0; k < exponent_; ++k) power *= gamma;
  return sign_ == Sign::kPos ? power : -power;
}

PayoffValue bellman_step(int q, PayoffValue next) {
  if (q == 0) return next.discounted();
  if (!next.is_zero()) {
    throw std::logic_error("turn payoff collected at a state that does not end the play");
  }
  return PayoffValue::from_turn_payoff(q);
}

std::string to_string(PayoffValue value) {
  if (value.is_zero()) return "0";
  std::string out = value.sign() == PayoffValue::Sign::kPos ? "+" : "-";
  out += "γ^";
  out += std::to_string(value.exponent());
  return out;
}

}  // namespace mprs
