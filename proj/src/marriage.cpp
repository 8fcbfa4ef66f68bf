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

#include "ssm/marriage.hpp"

#include <string>

#include "ssm/errors.hpp"

namespace ssm {
namespace {

void require_population(int n) {
  if (n < 1) throw DomainError("population parameter n must be >= 1, got " + std::to_string(n));
}

}  // namespace

PGFDistribution build_pgf(int n) {
  require_population(n);
  const auto size = static_cast<size_t>(4 * n) + 1;

  // fact[i] = i!, built once and shared across all k.
  std::vector<BigInt> fact(size);
  fact[0] = 1;
  for (size_t i = 1; i < size; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);

  const auto two_n = static_cast<size_t>(2 * n);
  PGFDistribution d;
  d.n_ = n;
  BigInt pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), two_n);
  d.total_ = fact[2 * two_n] / (fact[two_n] * pow2);

  d.weights_.assign(two_n + 1, BigInt(0));
  BigInt pairings_2k, choose, w;
  for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
    // (2k)!/(k! 2^k): ways to pair 2k people among themselves.
    pairings_2k = fact[2 * k] / fact[k];
    mpz_fdiv_q_2exp(pairings_2k.get_mpz_t(), pairings_2k.get_mpz_t(), k);
    choose = fact[two_n] / (fact[2 * k] * fact[two_n - 2 * k]);
    w = choose * choose * fact[two_n - 2 * k] * pairings_2k * pairings_2k;
    d.weights_[2 * k] = w;
  }

  d.probs_.reserve(d.weights_.size());
  for (const auto& weight : d.weights_) d.probs_.emplace_back(weight, d.total_);
  return d;
}

Rational mean_formula(int n) {
  require_population(n);
  const long m = n;
  return Rational(BigInt(2 * m * (2 * m - 1)), BigInt(4 * m - 1));
}

Rational variance_formula(int n) {
  require_population(n);
  const BigInt m = n;
  const BigInt num = 8 * m * m * (4 * m * m - 4 * m + 1);
  const BigInt den = 64 * m * m * m - 80 * m * m + 28 * m - 3;
  return Rational(num, den);
}

RationalFunction mean_function() {
  return RationalFunction(Polynomial({0, -2, 4}), Polynomial({-1, 4}));
}

RationalFunction variance_function() {
  return RationalFunction(Polynomial({0, 0, 8, -32, 32}),
                          Polynomial({-3, 28, -80, 64}));
}

BigInt matching_count(long m) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("matching_count needs an even m >= 2, got " + std::to_string(m));
  }
  const auto half = static_cast<unsigned long>(m / 2);
  BigInt denom = factorial(half);
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), half);
  return factorial(static_cast<unsigned long>(m)) / denom;
}

BigInt odd_double_factorial(long m) {
  BigInt out = 1;
  for (long i = 3; i <= 2 * m - 1; i += 2) out *= i;
  return out;
}

}  // namespace ssm
