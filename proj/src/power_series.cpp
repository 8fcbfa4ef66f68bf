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

#include "ssm/power_series.hpp"

#include <algorithm>

#include "ssm/errors.hpp"

namespace ssm {

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order)
    : coeffs_(std::move(coefficients)) {
  if (order < 0) throw DomainError("power series order must be >= 0");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

PowerSeries PowerSeries::multiply(const PowerSeries& other, int order) const {
  const int k_max = std::min({this->order(), other.order(), order});
  std::vector<Rational> out(static_cast<size_t>(k_max) + 1);
  for (int i = 0; i <= k_max; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j <= k_max; ++j) {
      out[static_cast<size_t>(i + j)] += (*this)[i] * other[j];
    }
  }
  return PowerSeries(std::move(out), k_max);
}

PowerSeries series_div(const PowerSeries& num, const PowerSeries& den,
                       int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  if (num.order() < order || den.order() < order) {
    throw DomainError("series_div inputs are truncated below the requested order");
  }
  if (den[0].is_zero()) {
    throw ArithmeticError(
        "series_div: denominator has zero constant term; factor out powers of t first");
  }
  const Rational inv0 = den[0].inverse();
  std::vector<Rational> q(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Rational acc = num[k];
    for (int j = 1; j <= k; ++j) {
      if (den[j].is_zero()) continue;
      acc -= den[j] * q[static_cast<size_t>(k - j)];
    }
    q[static_cast<size_t>(k)] = acc * inv0;
  }
  return PowerSeries(std::move(q), order);
}

}  // namespace ssm
