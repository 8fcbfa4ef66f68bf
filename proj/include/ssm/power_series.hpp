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

#include <span>
#include <vector>

#include "ssm/rational.hpp"

namespace ssm {

// Truncated formal power series c_0 + c_1 t + ... + c_K t^K. Always stores
// exactly K+1 coefficients, including trailing zeros.
class PowerSeries {
 public:
  // Pads with zeros or truncates so that exactly order+1 terms are kept.
  PowerSeries(std::vector<Rational> coefficients, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& operator[](int k) const {
    return coeffs_[static_cast<size_t>(k)];
  }

  // Cauchy product truncated at min(order(), other.order(), order).
  PowerSeries multiply(const PowerSeries& other, int order) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Formal quotient num/den through t^order. Throws ArithmeticError when den has
// a zero constant term, and DomainError when either input is truncated below
// order.
PowerSeries series_div(const PowerSeries& num, const PowerSeries& den,
                       int order);

}  // namespace ssm
