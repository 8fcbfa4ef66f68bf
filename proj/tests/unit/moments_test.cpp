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

#include "ssm/moments.hpp"

#include "gtest/gtest.h"
#include "ssm/errors.hpp"
#include "ssm/marriage.hpp"
#include "test_support.hpp"

namespace ssm {
namespace {

using testing::Q;

// Known closed form of alpha_4:
// (1/2)(384n^6-1664n^5+2632n^4-1896n^3+650n^2-100n+3)
//   / (n^2 (64n^4-256n^3+348n^2-188n+35))
Rational kurtosis_closed_form(long n) {
  const Polynomial num({3, -100, 650, -1896, 2632, -1664, 384});
  const Polynomial den({35, -188, 348, -256, 64});
  const Rational x(n);
  return Q("1/2") * num(x) / (x * x * den(x));
}

// Square of the closed form alpha_3 = (1/2) sqrt(2) sqrt((4n-3)/(n^2 Q(n))):
// (1/2) (4n-3) / (n^2 Q(n)), Q(n) = 64n^4-224n^3+276n^2-140n+25.
Rational skewness_squared_closed_form(long n) {
  const Polynomial q({25, -140, 276, -224, 64});
  const Rational x(n);
  return Q("1/2") * (Rational(4) * x - Rational(3)) / (x * x * q(x));
}

TEST(RawMoment, SmallestPopulation) {
  const PGFDistribution d = build_pgf(1);
  EXPECT_EQ(raw_moment(d, 0), Rational(1));
  EXPECT_EQ(raw_moment(d, 1), Q("2/3"));
  EXPECT_EQ(raw_moment(d, 2), Q("4/3"));
}

TEST(RawMoment, ThetaRouteMatchesPowerSum) {
  for (int n = 1; n <= 50; ++n) {
    const PGFDistribution d = build_pgf(n);
    const auto via_theta = raw_moments(d, 14);
    for (int r = 0; r <= 14; ++r) {
      ASSERT_EQ(via_theta[static_cast<size_t>(r)], raw_moment_power_sum(d, r))
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(CentralMoments, SmallestPopulation) {
  const auto central = central_moments(raw_moments(build_pgf(1), 4));
  EXPECT_EQ(central[0], Rational(1));
  EXPECT_EQ(central[1], Rational());
  EXPECT_EQ(central[2], Q("8/9"));
  EXPECT_EQ(central[3], Q("16/27"));
  EXPECT_EQ(central[4], Q("32/27"));
}

TEST(CentralMoments, FirstCentralMomentVanishes) {
  const std::vector<Rational> raw{1, Q("5/3"), Q("7/2"), Q("-1/9")};
  EXPECT_EQ(central_moments(raw)[1], Rational());
  EXPECT_THROW(central_moments(std::vector<Rational>{Q("1/2"), 1}), DomainError);
}

TEST(NormalizedMoments, SmallestPopulation) {
  const auto norm = normalized_moments(central_moments(raw_moments(build_pgf(1), 4)));
  EXPECT_EQ(norm.even.at(2), Rational(1));
  EXPECT_EQ(norm.odd_squared.at(3), Q("1/2"));
  EXPECT_EQ(norm.odd_sign.at(3), 1);
  EXPECT_EQ(norm.even.at(4), Q("3/2"));
}

TEST(NormalizedMoments, DegenerateDistribution) {
  const std::vector<Rational> central{1, 0, 0, 0};
  EXPECT_THROW(normalized_moments(central), DegenerateDistribution);
}

TEST(MomentTable, ClosedFormsAcrossRange) {
  const auto tables = moment_table_range(1, 60, 6);
  ASSERT_EQ(tables.size(), 60U);
  Rational previous_variance;
  for (const auto& t : tables) {
    const int n = t.n;
    EXPECT_EQ(t.raw[0], Rational(1));
    EXPECT_EQ(t.central[1], Rational());
    EXPECT_EQ(t.raw[1], mean_formula(n));
    EXPECT_EQ(t.central[2], variance_formula(n));
    EXPECT_GT(t.central[2], previous_variance);
    previous_variance = t.central[2];
    EXPECT_EQ(t.normalized.even.at(2), Rational(1));
    EXPECT_EQ(t.normalized.even.at(4), kurtosis_closed_form(n)) << n;
    EXPECT_EQ(t.normalized.odd_squared.at(3), skewness_squared_closed_form(n)) << n;
    EXPECT_GT(t.normalized.even.at(6), Rational());
  }
}

TEST(MomentTable, RangeIsOrderedAndThreadIndependent) {
  const auto one = moment_table_range(3, 17, 8, 1);
  const auto many = moment_table_range(3, 17, 8, 7);
  ASSERT_EQ(one.size(), many.size());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].n, 3 + static_cast<int>(i));
    EXPECT_EQ(one[i].raw, many[i].raw);
    EXPECT_EQ(one[i].central, many[i].central);
  }
}

TEST(MomentTable, SingleRowAndInvalidRanges) {
  const auto t = moment_table_range(1, 1, 4);
  ASSERT_EQ(t.size(), 1U);
  EXPECT_EQ(t[0].raw[1], Q("2/3"));
  EXPECT_EQ(t[0].central[2], Q("8/9"));
  EXPECT_EQ(t[0].alpha_or_square(4), Q("3/2"));
  EXPECT_THROW(moment_table_range(5, 3, 2), DomainError);
  EXPECT_THROW(moment_table_range(0, 3, 2), DomainError);
  EXPECT_THROW(moment_table_range(1, 3, 1), DomainError);
}

}  // namespace
}  // namespace ssm
