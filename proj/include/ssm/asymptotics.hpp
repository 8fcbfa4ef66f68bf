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

#include <string>
#include <string_view>
#include <vector>

#include "ssm/rational.hpp"
#include "ssm/rational_function.hpp"

namespace ssm {

// f(n) = sum_{j=0..K} c_j n^(p-j) + O(n^(p-K-1)) as n -> infinity.
// The zero function is the distinguished zero series (no coefficients), so
// c_0 != 0 whenever coefficients are present.
struct AsymptoticSeries {
  bool is_zero = false;
  int leading_exponent = 0;         // p
  std::vector<Rational> coefficients;  // c_0..c_K
  // c_{K+1}, computed alongside so truncation can be checked against f.
  Rational guard;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  // Exponent of the O(.) remainder, p - K - 1.
  int remainder_exponent() const { return leading_exponent - order() - 1; }
  // The truncated sum at n.
  Rational evaluate(const Rational& n) const;
  // "n - 1/4 - 1/16*n^-1 - ..." optionally followed by "+ O(n^-9)".
  std::string str(std::string_view var = "n", bool with_remainder = false) const;

  friend bool operator==(const AsymptoticSeries&, const AsymptoticSeries&) = default;
};

// Substitutes n = 1/t, reverses both coefficient lists and divides them as
// power series in t through t^order.
AsymptoticSeries expand_asymptotic(const RationalFunction& f, int order);

enum class LimitKind { kDivergesPositive, kDivergesNegative, kFinite, kZero };

struct SeriesLimit {
  LimitKind kind = LimitKind::kZero;
  Rational value;  // the limit for kFinite, 0 for kZero, unused otherwise
};

SeriesLimit series_limit(const AsymptoticSeries& s);
std::string to_string(LimitKind kind);

}  // namespace ssm
