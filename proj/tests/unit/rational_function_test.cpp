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

#include "ssm/rational_function.hpp"

#include "gtest/gtest.h"
#include "ssm/errors.hpp"
#include "test_support.hpp"

namespace ssm {
namespace {

using testing::Q;

TEST(RationalFunction, CanonicalizesContentSignAndCommonFactors) {
  // (2n^2 - 2n) / (4 - 4n) == -n/2
  const RationalFunction f(Polynomial({0, -2, 2}), Polynomial({4, -4}));
  EXPECT_EQ(f.numerator(), Polynomial({0, -1}));
  EXPECT_EQ(f.denominator(), Polynomial::constant(2));

  // n/n == 1
  const RationalFunction one(Polynomial({0, 1}), Polynomial({0, 1}));
  EXPECT_EQ(one, RationalFunction::constant(1));
  EXPECT_EQ(one(Rational(12345)), Rational(1));
  EXPECT_EQ(one.str(), "1");

  // Rational coefficients are cleared: (n/2)/(n/3 + 1/6) == 3n/(2n+1)
  const RationalFunction g(Polynomial({0, Q("1/2")}), Polynomial({Q("1/6"), Q("1/3")}));
  EXPECT_EQ(g.numerator(), Polynomial({0, 3}));
  EXPECT_EQ(g.denominator(), Polynomial({1, 2}));
}

TEST(RationalFunction, ZeroIsZeroOverOne) {
  const RationalFunction z(Polynomial(), Polynomial({1, 5}));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.denominator(), Polynomial::constant(1));
  EXPECT_EQ(z, RationalFunction());
  EXPECT_THROW(RationalFunction(Polynomial({1}), Polynomial()), DomainError);
}

TEST(RationalFunction, PrintsCompactForm) {
  const RationalFunction mean(Polynomial({0, -2, 4}), Polynomial({-1, 4}));
  EXPECT_EQ(mean.str(), "(4*n^2-2*n)/(4*n-1)");
  EXPECT_EQ(RationalFunction::constant(Q("5/7")).str(), "5/7");
}

TEST(RationalFunction, EvaluationRejectsPoles) {
  const RationalFunction f(Polynomial({1}), Polynomial({-3, 1}));
  EXPECT_EQ(f(Rational(4)), Rational(1));
  EXPECT_THROW(f(Rational(3)), PoleError);
}

TEST(RationalFunction, ArithmeticCancelsCommonFactors) {
  const RationalFunction n = RationalFunction::identity();
  const RationalFunction one = RationalFunction::constant(1);
  // 1/(n-1) - 1/(n+1) == 2/(n^2-1)
  const RationalFunction a = one / (n - one);
  const RationalFunction b = one / (n + one);
  EXPECT_EQ(a - b, RationalFunction(Polynomial({2}), Polynomial({-1, 0, 1})));
  // (n^2-1)/(n+1) == n-1
  EXPECT_EQ(RationalFunction(Polynomial({-1, 0, 1}), Polynomial({1, 1})), n - one);
  // ((n+1)/n) * (n/(n+1)) == 1
  EXPECT_EQ((n + one) / n * (n / (n + one)), one);
  EXPECT_EQ(((n + one) / n).pow(3)(Rational(2)), Q("27/8"));
  EXPECT_THROW(n / RationalFunction(), ArithmeticError);
}

TEST(RationalFunction, IntegerPolyGcd) {
  // (2n-1)^2 (4n-3) and (2n-1)(4n-1): gcd 2n-1
  const Polynomial a = Polynomial({-1, 2}).pow(2) * Polynomial({-3, 4});
  const Polynomial b = Polynomial({-1, 2}) * Polynomial({-1, 4}) * Rational(6);
  EXPECT_EQ(integer_poly_gcd(a, b), Polynomial({-1, 2}));
  EXPECT_EQ(integer_poly_gcd(Polynomial({1, 1}), Polynomial({-1, 1})), Polynomial({1}));
}

TEST(RationalFunctionProperty, CanonicalFormIsAFixpointAndValuesArePreserved) {
  testing::RationalGen gen(2718);
  for (int i = 0; i < 150; ++i) {
    const Polynomial common = gen.polynomial(2, 9);
    Polynomial p = gen.polynomial(4, 50) * common;
    Polynomial q = gen.polynomial(4, 50) * common;
    if (q.is_zero() || p.is_zero()) continue;
    const RationalFunction f(p, q);
    const RationalFunction again(f.numerator(), f.denominator());
    EXPECT_EQ(again, f);
    EXPECT_TRUE(f.numerator().has_integer_coefficients());
    EXPECT_GT(f.denominator().leading(), Rational());
    EXPECT_EQ(integer_poly_gcd(f.numerator(), f.denominator()).degree(), 0);
    for (long x = -5; x <= 5; ++x) {
      const Rational xv(x);
      if (q(xv).is_zero() || f.denominator()(xv).is_zero()) continue;
      EXPECT_EQ(f(xv), p(xv) / q(xv));
    }
  }
}

}  // namespace
}  // namespace ssm
