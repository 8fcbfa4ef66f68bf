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

#include "ssm/polynomial.hpp"
#include "ssm/rational.hpp"
#include "ssm/rational_function.hpp"

namespace ssm {

// Exact law of X = number of same-sex pairs in a uniformly random perfect
// matching of 2n men and 2n women.
//
// Index j of every vector is the value of X, not the half-count k = j/2.
// X is always even: k man-man pairs leave 2n-2k men for cross pairs, which
// forces exactly k woman-woman pairs.
class PGFDistribution {
 public:
  int n() const { return n_; }
  // Number of perfect matchings of the 4n individuals, (4n)!/((2n)! 2^(2n)).
  const BigInt& total_matchings() const { return total_; }
  // weights()[j] = number of matchings with X = j. Length 2n+1.
  const std::vector<BigInt>& weights() const { return weights_; }
  // probabilities()[j] = weights()[j] / total_matchings(). Length 2n+1.
  const std::vector<Rational>& probabilities() const { return probs_; }
  // P_n(x) = sum_j probabilities()[j] x^j.
  Polynomial polynomial() const { return Polynomial(probs_); }

 private:
  friend PGFDistribution build_pgf(int n);
  int n_ = 0;
  BigInt total_;
  std::vector<BigInt> weights_;
  std::vector<Rational> probs_;
};

// Choose which 2k men and 2k women form same-sex pairs, pair each group
// among itself ((2k-1)!! ways each), and match the remaining 2n-2k men to
// the remaining 2n-2k women ((2n-2k)! ways):
//
//   weight(2k) = C(2n,2k)^2 (2n-2k)! ((2k)!/(k! 2^k))^2.
//
// Throws DomainError for n < 1.
PGFDistribution build_pgf(int n);

// Closed forms for E[X] and Var[X]. Both throw DomainError for n < 1.
Rational mean_formula(int n);
Rational variance_formula(int n);

// The same closed forms as functions of n:
//   E[X]   = 2n(2n-1)/(4n-1)
//   Var[X] = 8n^2(4n^2-4n+1)/(64n^3-80n^2+28n-3)
RationalFunction mean_function();
RationalFunction variance_function();

// Perfect matchings of m labeled individuals, m!/((m/2)! 2^(m/2)) = (m-1)!!.
// Throws DomainError unless m is even and >= 2.
BigInt matching_count(long m);

// (2m-1)!! computed as a plain product; an independent route to the count.
BigInt odd_double_factorial(long m);

}  // namespace ssm
