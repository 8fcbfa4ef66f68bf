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

#pragma once

#include <map>
#include <span>
#include <vector>

#include "ssm/marriage.hpp"
#include "ssm/rational.hpp"

namespace ssm {

inline constexpr int kDefaultMaxMomentOrder = 14;

// Normalized moments alpha_r = mu_r / mu_2^(r/2). Odd orders are irrational in
// general, so they are carried exactly as alpha_r^2 = mu_r^2 / mu_2^r plus the
// sign of mu_r.
struct NormalizedMoments {
  std::map<int, Rational> even;         // r even, r >= 2
  std::map<int, Rational> odd_squared;  // r odd, r >= 3
  std::map<int, int> odd_sign;          // r odd, r >= 3: -1, 0 or +1
};

struct MomentTable {
  int n = 0;
  int r_max = 0;
  std::vector<Rational> raw;      // m_0..m_rmax, m_r = E[X^r]
  std::vector<Rational> central;  // mu_0..mu_rmax, mu_r = E[(X - m_1)^r]
  NormalizedMoments normalized;

  // alpha_r for even r, alpha_r^2 for odd r >= 3.
  const Rational& alpha_or_square(int r) const;
};

// E[X^r] as theta^r(P_n)(1), theta = x d/dx. Debug builds also compute the
// direct power sum and abort on disagreement.
Rational raw_moment(const PGFDistribution& pgf, int r);

// Same value by the direct sum over j of j^r p_j; an independent route.
Rational raw_moment_power_sum(const PGFDistribution& pgf, int r);

// m_0..m_rmax via repeated theta applications (one pass, r_max applications).
std::vector<Rational> raw_moments(const PGFDistribution& pgf, int r_max);

// mu_r = sum_i C(r,i) (-m_1)^(r-i) m_i. Requires raw[0] == 1.
std::vector<Rational> central_moments(std::span<const Rational> raw);

// Throws DegenerateDistribution when mu_2 == 0.
NormalizedMoments normalized_moments(std::span<const Rational> central);

MomentTable moment_table(const PGFDistribution& pgf, int r_max);
MomentTable moment_table(int n, int r_max);

// One table per n in [n_min, n_max], ordered by n. threads <= 0 picks the
// hardware concurrency; results do not depend on the thread count.
// Throws DomainError on an empty range or r_max < 2.
std::vector<MomentTable> moment_table_range(int n_min, int n_max, int r_max,
                                            int threads = 0);

}  // namespace ssm
