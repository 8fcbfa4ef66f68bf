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

#include "ssm/polynomial.hpp"

#include "gtest/gtest.h"
#include "ssm/errors.hpp"
#include "ssm/power_series.hpp"
#include "test_support.hpp"

namespace ssm {
namespace {

using testing::Q;
using testing::Qs;

// 2/3 + (1/3) x^2, the n = 1 generating function.
Polynomial pgf_one() { return Polynomial({Q("2/3"), 0, Q("1/3")}); }

TEST(Polynomial, EvaluatesExactly) {
  EXPECT_EQ(pgf_one()(1), Rational(1));
  EXPECT_EQ(pgf_one()(2), Rational(2));
  EXPECT_EQ(Polynomial()(Q("17/5")), Rational());
}

TEST(Polynomial, TrimsTrailingZeros) {
  const Polynomial p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_THROW((void)Polynomial().leading(), DomainError);
}

TEST(Polynomial, ThetaMultipliesByExponent) {
  EXPECT_EQ(pgf_one().theta(), Polynomial({0, 0, Q("2/3")}));
  EXPECT_TRUE(Polynomial::constant(Q("5/3")).theta().is_zero());
  const Polynomial x2 = Polynomial::monomial(1, 2);
  EXPECT_EQ(x2.theta().theta()(1), Rational(4));
}

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial a({-1, 4});  // 4x - 1
  const Polynomial b({0, -2, 4});
  EXPECT_EQ((a * a), Polynomial({1, -8, 16}));
  EXPECT_EQ(a.pow(2), a * a);
  EXPECT_EQ((b - b), Polynomial());
  EXPECT_EQ(b.str("n"), "4*n^2-2*n");
  EXPECT_EQ(Polynomial({Q("-1/2"), -1, 0, 1}).str(), "x^3-x-1/2");
}

TEST(PolynomialProperty, ThetaAtOneIsWeightedCoefficientSum) {
  testing::RationalGen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = gen.polynomial(12);
    Rational expected;
    for (int k = 0; k <= p.degree(); ++k) expected += Rational(k) * p.coefficient(k);
    EXPECT_EQ(p.theta()(1), expected);
  }
}

TEST(SeriesDiv, GeometricSeries) {
  const PowerSeries one({1}, 3);
  const PowerSeries one_minus_t({1, -1}, 3);
  EXPECT_EQ(series_div(one, one_minus_t, 3), PowerSeries({1, 1, 1, 1}, 3));
}

TEST(SeriesDiv, SelfQuotientIsOne) {
  const PowerSeries a(Qs({"3", "-1/2", "7"}), 2);
  EXPECT_EQ(series_div(a, a, 2), PowerSeries({1, 0, 0}, 2));
}

TEST(SeriesDiv, AlternatingSeries) {
  EXPECT_EQ(series_div(PowerSeries({1}, 2), PowerSeries({1, 1}, 2), 2),
            PowerSeries({1, -1, 1}, 2));
}

TEST(SeriesDiv, RejectsZeroConstantTerm) {
  EXPECT_THROW(series_div(PowerSeries({1}, 2), PowerSeries({0, 1}, 2), 2),
               ArithmeticError);
  EXPECT_THROW(series_div(PowerSeries({1}, 1), PowerSeries({1}, 2), 2), DomainError);
}

TEST(SeriesDivProperty, QuotientTimesDenominatorReproducesNumerator) {
  testing::RationalGen gen(99);
  for (int i = 0; i < 100; ++i) {
    const int k = static_cast<int>(gen.integer(0, 12));
    std::vector<Rational> a(static_cast<size_t>(k) + 1), b(static_cast<size_t>(k) + 1);
    for (auto& x : a) x = gen.rational(50);
    for (auto& x : b) x = gen.rational(50);
    if (b[0].is_zero()) b[0] = 1;
    const PowerSeries num(a, k), den(b, k);
    EXPECT_EQ(series_div(num, den, k).multiply(den, k), num);
  }
}

}  // namespace
}  // namespace ssm
