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
#include <string>
#include <string_view>
#include <vector>

#include "ssm/rational.hpp"

namespace ssm {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending order (index = exponent). The highest stored coefficient is always
// nonzero; the zero polynomial stores nothing and reports degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending)
      : Polynomial(std::vector<Rational>(ascending)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  // Zero beyond the stored range.
  Rational coefficient(int exponent) const;
  const Rational& leading() const;

  // Horner evaluation.
  Rational operator()(const Rational& x) const;

  // x * p'(x): the coefficient at exponent k is multiplied by k.
  Polynomial theta() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  // Human-readable, highest power first: "4*n^2-2*n".
  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace ssm
