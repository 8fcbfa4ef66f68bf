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

#include "ssm/asymptotics.hpp"

#include <algorithm>

#include "ssm/errors.hpp"
#include "ssm/power_series.hpp"

namespace ssm {
namespace {

PowerSeries reversed(const Polynomial& p, int order) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  std::reverse(c.begin(), c.end());
  return PowerSeries(std::move(c), order);
}

Rational int_pow(const Rational& base, int e) {
  if (e >= 0) return base.pow(static_cast<unsigned>(e));
  return base.inverse().pow(static_cast<unsigned>(-e));
}

}  // namespace

AsymptoticSeries expand_asymptotic(const RationalFunction& f, int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  AsymptoticSeries s;
  if (f.is_zero()) {
    s.is_zero = true;
    return s;
  }
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  // num(1/t) = t^-deg(num) * rev(num)(t), likewise for den, so
  // f = t^(deg(den) - deg(num)) * rev(num)/rev(den) and rev(den)(0) != 0.
  s.leading_exponent = num.degree() - den.degree();
  const int internal = order + 1;
  const PowerSeries q =
      series_div(reversed(num, internal), reversed(den, internal), internal);
  s.coefficients.assign(q.coefficients().begin(), q.coefficients().end() - 1);
  s.guard = q[internal];
  return s;
}

Rational AsymptoticSeries::evaluate(const Rational& n) const {
  Rational acc;
  for (int j = 0; j <= order(); ++j) {
    const auto& c = coefficients[static_cast<size_t>(j)];
    if (c.is_zero()) continue;
    acc += c * int_pow(n, leading_exponent - j);
  }
  return acc;
}

std::string AsymptoticSeries::str(std::string_view var, bool with_remainder) const {
  std::string out;
  const std::string v(var);
  for (int j = 0; j <= order(); ++j) {
    const auto& c = coefficients[static_cast<size_t>(j)];
    if (c.is_zero()) continue;
    const int e = leading_exponent - j;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  if (with_remainder && !is_zero) {
    out += " + O(" + v + "^" + std::to_string(remainder_exponent()) + ")";
  }
  return out;
}

SeriesLimit series_limit(const AsymptoticSeries& s) {
  if (s.is_zero || s.leading_exponent < 0) return {LimitKind::kZero, Rational()};
  const Rational& c0 = s.coefficients.front();
  if (s.leading_exponent == 0) return {LimitKind::kFinite, c0};
  return {c0.sign() > 0 ? LimitKind::kDivergesPositive : LimitKind::kDivergesNegative,
          Rational()};
}

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::kDivergesPositive:
      return "diverges+";
    case LimitKind::kDivergesNegative:
      return "diverges-";
    case LimitKind::kFinite:
      return "finite";
    case LimitKind::kZero:
      return "zero";
  }
  return "unknown";
}

}  // namespace ssm
