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

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace mprs {
namespace {

using oracle::Exact;

TEST(ComparePayoffs, Examples) {
  EXPECT_EQ(compare_payoffs(PayoffValue::pos(2), PayoffValue::pos(5)),
            std::strong_ordering::greater);
  EXPECT_EQ(compare_payoffs(PayoffValue::neg(1), PayoffValue::neg(4)), std::strong_ordering::less);
  EXPECT_EQ(compare_payoffs(PayoffValue::zero(), PayoffValue::pos(7)), std::strong_ordering::less);
  EXPECT_EQ(compare_payoffs(PayoffValue::neg(0), PayoffValue::zero()), std::strong_ordering::less);
  EXPECT_EQ(compare_payoffs(PayoffValue::pos(3), PayoffValue::pos(3)),
            std::strong_ordering::equal);
}

TEST(PayoffValue, Qualitative) {
  EXPECT_EQ(PayoffValue::pos(3).qualitative(), 1);
  EXPECT_EQ(PayoffValue::zero().qualitative(), 0);
  EXPECT_EQ(PayoffValue::neg(2).qualitative(), -1);
}

TEST(PayoffValue, DiscountingAndBellmanStep) {
  EXPECT_EQ(PayoffValue::pos(1).discounted(), PayoffValue::pos(2));
  EXPECT_EQ(PayoffValue::zero().discounted(), PayoffValue::zero());
  EXPECT_EQ(bellman_step(0, PayoffValue::neg(0)), PayoffValue::neg(1));
  EXPECT_EQ(bellman_step(1, PayoffValue::zero()), PayoffValue::pos(0));
  EXPECT_EQ(bellman_step(-1, PayoffValue::zero()), PayoffValue::neg(0));
  EXPECT_THROW(bellman_step(1, PayoffValue::pos(0)), std::logic_error);
}

TEST(PayoffValue, Rendering) {
  EXPECT_EQ(to_string(PayoffValue::pos(1)), "+γ^1");
  EXPECT_EQ(to_string(PayoffValue::neg(0)), "-γ^0");
  EXPECT_EQ(to_string(PayoffValue::zero()), "0");
}

TEST(PayoffValue, Evaluate) {
  EXPECT_EQ(PayoffValue::pos(2).evaluate(Rational(1, 3)), Rational(1, 9));
  EXPECT_EQ(PayoffValue::neg(1).evaluate(Rational(3, 10)), Rational(-3, 10));
  EXPECT_EQ(PayoffValue::zero().evaluate(Rational(1, 2)), Rational(0));
}

Exact numeric(PayoffValue value, const Exact& gamma) {
  Exact power = 1;
  for (std::uint32_t k = 0; k < value.exponent(); ++k) power *= gamma;
  return power * value.qualitative();
}

// The symbolic order matches the numeric order of ±γ^k for random rational
// γ in (0,1).
TEST(PayoffProperties, OrderSoundness) {
  std::mt19937_64 rng(20261016);
  auto random_value = [&rng] {
    const auto exponent = static_cast<std::uint32_t>(rng() % 12);
    switch (rng() % 3) {
      case 0: return PayoffValue::neg(exponent);
      case 1: return PayoffValue::zero();
      default: return PayoffValue::pos(exponent);
    }
  };
  for (int trial = 0; trial < 5000; ++trial) {
    const std::int64_t den = 2 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t num = 1 + static_cast<std::int64_t>(rng() % (den - 1));
    const Exact gamma(num, den);
    const PayoffValue a = random_value();
    const PayoffValue b = random_value();
    const Exact x = numeric(a, gamma);
    const Exact y = numeric(b, gamma);
    const auto expected = x < y ? std::strong_ordering::less
                          : x > y ? std::strong_ordering::greater
                                  : std::strong_ordering::equal;
    ASSERT_EQ(compare_payoffs(a, b), expected)
        << to_string(a) << " vs " << to_string(b) << " at gamma " << gamma;
  }
}

}  // namespace
}  // namespace mprs
