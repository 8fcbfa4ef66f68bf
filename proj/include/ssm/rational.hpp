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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ssm {

// Arbitrary-precision integer. GMP comfortably holds 800! (1977 digits) and
// far beyond, which is the largest factorial the n <= 200 pipeline touches.
using BigInt = mpz_class;

BigInt factorial(unsigned long m);
BigInt binomial(unsigned long m, unsigned long k);
BigInt parse_bigint(std::string_view text);

// Exact fraction num/den, always stored in lowest terms with den > 0 and zero
// as 0/1. Values are immutable in practice: every operator returns a fresh
// canonical value.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : q_(value) {}  // NOLINT
  // Throws ArithmeticError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "p/q" (q != 0); surrounding whitespace is ignored.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws ArithmeticError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  double to_double() const { return q_.get_d(); }
  // "2/3", "-5", "0": integers print without a denominator.
  std::string str() const;
  // Always "num/den", e.g. "3/1"; used by machine-readable output.
  std::string fraction_str() const;

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace ssm
