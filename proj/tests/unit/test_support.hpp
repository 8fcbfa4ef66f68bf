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

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ssm/polynomial.hpp"
#include "ssm/rational.hpp"

namespace ssm::testing {

inline Rational Q(std::string_view text) { return Rational::parse(text); }

inline std::vector<Rational> Qs(std::initializer_list<std::string_view> texts) {
  std::vector<Rational> out;
  for (auto t : texts) out.push_back(Q(t));
  return out;
}

// Small random rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }
  Rational rational(long bound = 1000) {
    return Rational(BigInt(integer(-bound, bound)), BigInt(integer(1, bound)));
  }
  Polynomial polynomial(int max_degree, long bound = 1000) {
    std::vector<Rational> c(static_cast<size_t>(integer(0, max_degree)) + 1);
    for (auto& x : c) x = rational(bound);
    return Polynomial(std::move(c));
  }
  // Integer coefficients in [-bound, bound] with exact degree `degree`.
  Polynomial int_polynomial(int degree, long bound) {
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = Rational(integer(-bound, bound));
    while (c.back().is_zero()) c.back() = Rational(integer(-bound, bound));
    return Polynomial(std::move(c));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ssm::testing
