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

#include "ssm/rational_function.hpp"

#include <stdexcept>
#include <utility>

#include "ssm/detail/modular.hpp"
#include "ssm/errors.hpp"

namespace ssm {
namespace {

// Integer polynomial, ascending, trimmed.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly to_zpoly(const Polynomial& p) {
  ZPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!c.is_integer()) throw std::logic_error("to_zpoly: non-integer coefficient");
    out.push_back(c.num_ref());
  }
  return out;
}

Polynomial from_zpoly(const ZPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return Polynomial(std::move(out));
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(ZPoly& p, const BigInt& c) {
  if (c == 1) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Primitive part with positive leading coefficient.
ZPoly primitive(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  BigInt c = content(p);
  if (p.back() < 0) c = -c;
  divide_exact(p, c);
  return p;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

// A scalar multiple of the pseudo-remainder of a by b; enough for gcds.
ZPoly pseudo_remainder(ZPoly r, const ZPoly& b) {
  const int db = degree(b);
  const BigInt& lb = b.back();
  BigInt g, fr, fb;
  while (!r.empty() && degree(r) >= db) {
    const size_t shift = static_cast<size_t>(degree(r) - db);
    mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), r.back().get_mpz_t());
    mpz_divexact(fb.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(fr.get_mpz_t(), r.back().get_mpz_t(), g.get_mpz_t());
    // r <- fb*r - fr*x^shift*b, which cancels the top term.
    for (auto& x : r) x *= fb;
    for (size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), fr.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
  }
  return r;
}

bool coprime_mod_p(const ZPoly& a, const ZPoly& b) {
  std::vector<std::uint64_t> am, bm;
  am.reserve(a.size());
  bm.reserve(b.size());
  for (const auto& c : a) am.push_back(detail::reduce(c));
  for (const auto& c : b) bm.push_back(detail::reduce(c));
  // A leading coefficient that vanishes mod p breaks the degree bound.
  if (am.back() == 0 || bm.back() == 0) return false;
  return detail::gcd_degree_mod(std::move(am), std::move(bm)) == 0;
}

// gcd of primitive polynomials via the primitive remainder sequence.
ZPoly gcd_primitive(ZPoly a, ZPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) == 0 || degree(b) == 0) return {1};
  if (coprime_mod_p(a, b)) return {1};
  if (degree(a) < degree(b)) std::swap(a, b);
  while (true) {
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (degree(r) == 0) return {1};
    a = std::move(b);
    b = primitive(std::move(r));
  }
}

// a / g where g is known to divide a; g primitive so the quotient is integral.
ZPoly divide_poly_exact(ZPoly a, const ZPoly& g) {
  if (degree(g) == 0) {
    divide_exact(a, g[0]);
    return a;
  }
  const int dg = degree(g);
  ZPoly q(static_cast<size_t>(degree(a) - dg) + 1);
  BigInt t;
  while (!a.empty() && degree(a) >= dg) {
    const size_t shift = static_cast<size_t>(degree(a) - dg);
    if (!mpz_divisible_p(a.back().get_mpz_t(), g.back().get_mpz_t())) {
      throw std::logic_error("divide_poly_exact: inexact division");
    }
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), g.back().get_mpz_t());
    q[shift] = t;
    for (size_t j = 0; j < g.size(); ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), t.get_mpz_t(), g[j].get_mpz_t());
    }
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("divide_poly_exact: nonzero remainder");
  trim(q);
  return q;
}

// Scales num and den by the lcm of all coefficient denominators.
std::pair<ZPoly, ZPoly> clear_denominators(const Polynomial& num,
                                           const Polynomial& den) {
  BigInt l = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coefficients()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
    }
  }
  auto scale = [&l](const Polynomial& p) {
    ZPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
      BigInt v;
      mpz_divexact(v.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
      out.push_back(v * c.num_ref());
    }
    return out;
  };
  return {scale(num), scale(den)};
}

// Joint content 1 and positive leading denominator coefficient.
void normalize_scale(ZPoly& num, ZPoly& den) {
  BigInt c = content(den);
  for (const auto& x : num) {
    if (c == 1) break;
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  }
  if (den.back() < 0) c = -c;
  divide_exact(num, c);
  divide_exact(den, c);
}

}  // namespace

Polynomial integer_poly_gcd(const Polynomial& a, const Polynomial& b) {
  return from_zpoly(gcd_primitive(primitive(to_zpoly(a)), primitive(to_zpoly(b))));
}

RationalFunction::RationalFunction() : den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  auto [a, b] = clear_denominators(num, den);
  if (degree(a) > 0 && degree(b) > 0) {
    const ZPoly g = gcd_primitive(primitive(a), primitive(b));
    if (degree(g) > 0) {
      a = divide_poly_exact(std::move(a), g);
      b = divide_poly_exact(std::move(b), g);
    }
  }
  normalize_scale(a, b);
  num_ = from_zpoly(a);
  den_ = from_zpoly(b);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, AlreadyCoprime) {
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  auto [a, b] = clear_denominators(num, den);
  normalize_scale(a, b);
  num_ = from_zpoly(a);
  den_ = from_zpoly(b);
}

RationalFunction RationalFunction::identity() {
  return RationalFunction(Polynomial({0, 1}));
}

Rational RationalFunction::operator()(const Rational& n) const {
  const Rational d = den_(n);
  if (d.is_zero()) throw PoleError("rational function has a pole at n = " + n.str());
  return num_(n) / d;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, AlreadyCoprime{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  const ZPoly qa = to_zpoly(a.den_);
  const ZPoly qb = to_zpoly(b.den_);
  const ZPoly g = gcd_primitive(primitive(qa), primitive(qb));
  const ZPoly qa_g = divide_poly_exact(qa, g);
  const ZPoly qb_g = divide_poly_exact(qb, g);
  const Polynomial num = from_zpoly(mul(to_zpoly(a.num_), qb_g)) +
                         from_zpoly(mul(to_zpoly(b.num_), qa_g));
  return RationalFunction(num, from_zpoly(mul(qa, qb_g)));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel; canonical inputs then give a coprime product.
  const ZPoly pa = to_zpoly(a.num_), qa = to_zpoly(a.den_);
  const ZPoly pb = to_zpoly(b.num_), qb = to_zpoly(b.den_);
  const ZPoly g1 = gcd_primitive(primitive(pa), primitive(qb));
  const ZPoly g2 = gcd_primitive(primitive(pb), primitive(qa));
  const ZPoly num = mul(divide_poly_exact(pa, g1), divide_poly_exact(pb, g2));
  const ZPoly den = mul(divide_poly_exact(qa, g2), divide_poly_exact(qb, g1));
  return RationalFunction(from_zpoly(num), from_zpoly(den), RationalFunction::AlreadyCoprime{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
  return a * RationalFunction(b.den_, b.num_, RationalFunction::AlreadyCoprime{});
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  if (exponent == 0) return constant(1);
  return RationalFunction(num_.pow(exponent), den_.pow(exponent), AlreadyCoprime{});
}

std::string RationalFunction::str(std::string_view var) const {
  if (den_ == Polynomial::constant(1)) return num_.str(var);
  if (num_.degree() <= 0 && den_.degree() == 0) {
    return (num_.coefficient(0) / den_.coefficient(0)).str();
  }
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace ssm
