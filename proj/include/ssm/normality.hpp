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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssm/asymptotics.hpp"
#include "ssm/guesser.hpp"
#include "ssm/moments.hpp"
#include "ssm/rational.hpp"
#include "ssm/rational_function.hpp"

namespace ssm {

inline constexpr int kDefaultVerifyNMax = 60;
inline constexpr int kDefaultSeriesOrder = 9;

// E[Z^r] for a standard normal Z: 0 for odd r, r!/(2^(r/2) (r/2)!) for even r.
Rational normal_moment(int r);

// A raw moment m_r(n) recovered by the guesser.
struct RawMomentFit {
  int r = 0;
  std::optional<FitResult> fit;
  std::string error;  // set when fit is empty
};

struct MomentVerdict {
  int r = 0;
  // alpha_r for even r, alpha_r^2 for odd r, derived from the raw moment fits.
  std::optional<RationalFunction> fitted_function;
  std::optional<AsymptoticSeries> series;
  std::optional<SeriesLimit> limit;
  Rational expected_limit;
  // Odd r only: the sign of mu_r at the largest tabulated n, and the smallest
  // n from which that sign holds through n_max. An observation recorded
  // alongside the verdict, never part of it.
  int eventual_sign = 0;
  int sign_stable_from = 0;
  bool pass = false;
  std::string diagnostics;
};

struct NormalityReport {
  int n_max = 0;
  int r_max = 0;
  int series_order = 0;
  std::vector<RawMomentFit> raw_fits;   // r = 1..r_max
  std::vector<MomentVerdict> per_moment;  // r = 3..r_max
  bool overall = false;
};

struct NormalityOptions {
  int threads = 0;  // <= 0: hardware concurrency
  int verification_points = kDefaultVerificationPoints;
};

// For r = 3..r_max:
//   1. fit m_1..m_rmax over n = 1..n_max with the guesser,
//   2. derive mu_r = sum_i C(r,i) (-m_1)^(r-i) m_i and
//      alpha_r = mu_r / mu_2^(r/2)  (r even)  or  alpha_r^2 = mu_r^2 / mu_2^r
//      (r odd) exactly as rational functions of n,
//   3. check the derived function against the exact moment table at every n,
//   4. expand asymptotically and compare the limit with normal_moment(r)
//      (0 for the odd squares).
// Fit or check failures are recorded per moment and make the report fail;
// they do not abort the run. Throws DomainError when r_max < 3 or n_max < 1.
NormalityReport verify_normality(int n_max, int r_max, int series_order,
                                 const NormalityOptions& options = {});

// Same, over precomputed tables for n = 1..tables.size() (each with
// r_max >= the requested r_max).
NormalityReport verify_normality(std::span<const MomentTable> tables, int r_max,
                                 int series_order,
                                 const NormalityOptions& options = {});

// Exact mu_r(n) and alpha_r(n) (alpha_r^2 for odd r) from raw-moment
// functions m_1..m_R given in order.
RationalFunction central_moment_function(std::span<const RationalFunction> raw, int r);
RationalFunction normalized_moment_function(std::span<const RationalFunction> raw, int r);

struct LocalLimitDiscrepancy {
  double sup_discrepancy = 0.0;
  int at_value = 0;
};

// max over even j of |p_j - 2 phi((j - mean)/sd) / sd|, with mean and variance
// from the closed forms. The factor 2 is the lattice spacing: odd values have
// probability zero. A numeric diagnostic only.
LocalLimitDiscrepancy distribution_vs_normal(int n);

}  // namespace ssm
