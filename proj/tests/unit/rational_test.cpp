// Copyright 2026 The ssm Authors.
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

#include "ssm/rational.hpp"

#include "gtest/gtest.h"
#include "ssm/errors.hpp"
#include "test_support.hpp"

namespace ssm {
namespace {

using testing::Q;

TEST(Rational, AddsFractions) { EXPECT_EQ(Q("1/2") + Q("1/3"), Q("5/6")); }

TEST(Rational, CanonicalizesOnConstruction) {
  const Rational half(BigInt(2), BigInt(4));
  EXPECT_EQ(half.numerator(), 1);
  EXPECT_EQ(half.denominator(), 2);

  const Rational negative_den(BigInt(3), BigInt(-6));
  EXPECT_EQ(negative_den.numerator(), -1);
  EXPECT_EQ(negative_den.denominator(), 2);

  const Rational zero(BigInt(0), BigInt(-17));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_EQ(zero.fraction_str(), "0/1");
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Q("7/3") / Q("0/1"), ArithmeticError);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), ArithmeticError);
  EXPECT_THROW(Rational().inverse(), ArithmeticError);
}

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(Q(" -10/4 ").str(), "-5/2");
  EXPECT_EQ(Q("+6").str(), "6");
  EXPECT_EQ(Q("6").fraction_str(), "6/1");
  EXPECT_THROW(Q("1/x"), DomainError);
  EXPECT_THROW(Q(""), DomainError);
}

TEST(Rational, OrderingAndPowers) {
  EXPECT_LT(Q("1/3"), Q("1/2"));
  EXPECT_GT(Q("-1/3"), Q("-1/2"));
  EXPECT_EQ(Q("-2/3").pow(3), Q("-8/27"));
  EXPECT_EQ(Q("5/7").pow(0), Rational(1));
  EXPECT_EQ(Q("-2/3").abs(), Q("2/3"));
}

// Largest factorial the n <= 200 pipeline needs is (4*200)! = 800!.
TEST(Rational, HoldsEightHundredFactorial) {
  const BigInt f = factorial(800);
  EXPECT_EQ(f.get_str().size(), 1977U);
  EXPECT_EQ(f.get_str().substr(0, 10), "7710530113");
  // 800!/799! round-trips exactly through a fraction.
  EXPECT_EQ(Rational(f, factorial(799)), Rational(800));
  EXPECT_EQ(binomial(800, 400) * factorial(400) * factorial(400), f);
}

TEST(RationalProperty, FieldAxiomsHoldExactly) {
  testing::RationalGen gen(20261018);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rational());
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(RationalProperty, CanonicalFormIsAFixpoint) {
  testing::RationalGen gen(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.rational(1'000'000);
    const Rational again(a.numerator(), a.denominator());
    EXPECT_EQ(again.numerator(), a.numerator());
    EXPECT_EQ(again.denominator(), a.denominator());
    EXPECT_GT(a.denominator(), 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.num_ref().get_mpz_t(), a.den_ref().get_mpz_t());
    EXPECT_EQ(g, 1);
  }
}

}  // namespace
}  // namespace ssm
