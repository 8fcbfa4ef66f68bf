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

#include "ssm/rational.hpp"

#include <ostream>

#include "ssm/errors.hpp"

namespace ssm {

BigInt factorial(unsigned long m) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), m);
  return result;
}

BigInt binomial(unsigned long m, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), m, k);
  return result;
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw DomainError("empty integer literal");
  }
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  BigInt value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw DomainError("malformed integer literal '" + std::string(text) + "'");
  }
  return value;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)),
                  parse_bigint(text.substr(slash + 1)));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& other) {
  q_ += other.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  q_ -= other.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  q_ *= other.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw ArithmeticError("division by zero");
  q_ /= other.q_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned exponent) const {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), q_.get_den_mpz_t(), exponent);
  // Powers of a reduced fraction stay reduced and keep den > 0.
  return Rational(std::move(out));
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace ssm
