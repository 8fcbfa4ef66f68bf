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

#include "ssm/polynomial.hpp"
#include "ssm/rational.hpp"

namespace ssm {

// p(n)/q(n) in canonical form:
//   * p and q have integer coefficients and no common polynomial factor,
//   * the gcd of all coefficients of p and q together is 1,
//   * the leading coefficient of q is positive,
//   * the zero function is 0/1.
// Canonical form makes equality a coefficient-by-coefficient comparison.
class RationalFunction {
 public:
  // The zero function.
  RationalFunction();
  // Any rational coefficients; reduced to canonical form. Throws DomainError
  // when den is the zero polynomial.
  RationalFunction(const Polynomial& num, const Polynomial& den);
  explicit RationalFunction(const Polynomial& poly)
      : RationalFunction(poly, Polynomial::constant(1)) {}
  static RationalFunction constant(const Rational& c) {
    return RationalFunction(Polynomial::constant(c));
  }
  // The identity n -> n.
  static RationalFunction identity();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Throws PoleError when the denominator vanishes at n.
  Rational operator()(const Rational& n) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  // Throws ArithmeticError when b is the zero function.
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  RationalFunction pow(unsigned exponent) const;

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

  // "(4*n^2-2*n)/(4*n-1)"; a polynomial prints without the denominator.
  std::string str(std::string_view var = "n") const;

 private:
  struct AlreadyCoprime {};
  RationalFunction(Polynomial num, Polynomial den, AlreadyCoprime);

  Polynomial num_;
  Polynomial den_;
};

// Primitive gcd of two integer-coefficient polynomials (positive leading
// coefficient). Exposed for tests; gcd(0, 0) is 0.
Polynomial integer_poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace ssm
