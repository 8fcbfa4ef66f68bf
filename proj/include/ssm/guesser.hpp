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

#include <vector>

#include "ssm/rational.hpp"
#include "ssm/rational_function.hpp"

namespace ssm {

struct DataPoint {
  long n = 0;
  Rational value;
};

// Use the largest total degree the data can both determine and verify:
// points - verification_points - 2.
inline constexpr int kAutoDegree = -1;
inline constexpr int kDefaultVerificationPoints = 10;
inline constexpr int kMinVerificationPoints = 4;

struct FitRequest {
  std::vector<DataPoint> points;  // strictly increasing in n
  int max_total_degree = kAutoDegree;
  // Trailing points withheld from the solve and used only to verify.
  int verification_points = kDefaultVerificationPoints;
};

struct FitResult {
  RationalFunction function;
  int numerator_degree = 0;
  int denominator_degree = 0;
  int points_used = 0;  // points in the linear solve
  int verified_on = 0;  // withheld points the candidate was checked against
};

// Finds the rational function p(n)/q(n) of least total degree (ties broken by
// smaller denominator degree) that reproduces every point exactly.
//
// For each degree pair the homogeneous system p(n_i) - v_i q(n_i) = 0 is set
// up on the leading points and solved by fraction-free elimination over the
// integers. A pair is accepted only when the nullspace is one-dimensional and
// the candidate matches all points, withheld ones included, without a pole at
// any of them.
//
// Throws DegenerateData when there are too few points for the degree budget
// (or fewer than kMinVerificationPoints withheld, or the n are not strictly
// increasing), and NoFit when no pair within the budget passes.
FitResult fit_rational(const FitRequest& request);

// Exact f(n). Throws PoleError when the denominator vanishes at n.
Rational evaluate_ratfunc(const RationalFunction& f, long n);

// Helper for callers with a dense sequence: points (n_first + i, values[i]).
std::vector<DataPoint> make_points(long n_first, const std::vector<Rational>& values);

}  // namespace ssm
