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

#include "ssm/guesser.hpp"

#include <optional>
#include <string>

#include "ssm/detail/modular.hpp"
#include "ssm/errors.hpp"

namespace ssm {
namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Row i of the cross-multiplied system for degrees (dn, dd), scaled by the
// denominator of v_i:  den_i * [1 n .. n^dn]  |  -num_i * [1 n .. n^dd].
std::vector<BigInt> system_row(const DataPoint& pt, int dn, int dd) {
  std::vector<BigInt> row;
  row.reserve(static_cast<size_t>(dn + dd + 2));
  BigInt power = 1;
  for (int j = 0; j <= dn; ++j) {
    row.push_back(pt.value.den_ref() * power);
    power *= pt.n;
  }
  power = 1;
  for (int j = 0; j <= dd; ++j) {
    row.push_back(-pt.value.num_ref() * power);
    power *= pt.n;
  }
  return row;
}

// True when the system certainly has only the trivial solution: full column
// rank modulo p implies full column rank over Q.
bool full_rank_mod_p(std::span<const DataPoint> pts, int dn, int dd) {
  const auto cols = static_cast<size_t>(dn + dd + 2);
  if (pts.size() < cols) return false;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(pts.size());
  for (const auto& pt : pts) {
    const std::uint64_t nm = detail::reduce(BigInt(pt.n));
    const std::uint64_t num = detail::reduce(pt.value.num_ref());
    const std::uint64_t den = detail::reduce(pt.value.den_ref());
    std::vector<std::uint64_t> row;
    row.reserve(cols);
    std::uint64_t power = 1;
    for (int j = 0; j <= dn; ++j) {
      row.push_back(detail::mod_mul(den, power));
      power = detail::mod_mul(power, nm);
    }
    power = 1;
    for (int j = 0; j <= dd; ++j) {
      row.push_back(detail::mod_sub(0, detail::mod_mul(num, power)));
      power = detail::mod_mul(power, nm);
    }
    rows.push_back(std::move(row));
  }
  return detail::rank_mod(rows, cols) == cols;
}

void remove_row_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

struct Echelon {
  Matrix rows;                     // fraction-free row echelon form
  std::vector<size_t> pivot_cols;  // one per nonzero row
};

// Bareiss elimination to row echelon form. Every division is exact.
Echelon bareiss_echelon(Matrix m, size_t cols) {
  Echelon e;
  BigInt prev = 1;
  size_t r = 0;
  BigInt t;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const BigInt& pv = m[r][c];
    for (size_t i = r + 1; i < m.size(); ++i) {
      const BigInt lead = m[i][c];
      for (size_t j = c + 1; j < cols; ++j) {
        t = pv * m[i][j];
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), m[r][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = pv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

// The unique (up to scale) null vector of a rank cols-1 echelon form, as a
// primitive integer vector.
std::vector<BigInt> null_vector(const Echelon& e, size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> x(cols);
  x[free_col] = 1;
  for (size_t i = e.rows.size(); i-- > 0;) {
    const size_t pc = e.pivot_cols[i];
    Rational acc;
    for (size_t j = pc + 1; j < cols; ++j) {
      if (x[j].is_zero() || e.rows[i][j] == 0) continue;
      acc += Rational(e.rows[i][j]) * x[j];
    }
    x[pc] = -acc / Rational(e.rows[i][pc]);
  }
  BigInt l = 1;
  for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den_ref().get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(cols);
  for (const auto& v : x) out.push_back(v.num_ref() * (l / v.den_ref()));
  remove_row_content(out);
  return out;
}

bool matches_all(const Polynomial& p, const Polynomial& q,
                 std::span<const DataPoint> pts) {
  for (const auto& pt : pts) {
    const Rational n(pt.n);
    const Rational qv = q(n);
    if (qv.is_zero()) return false;
    if (p(n) != pt.value * qv) return false;
  }
  return true;
}

std::optional<RationalFunction> try_degrees(std::span<const DataPoint> solve,
                                            std::span<const DataPoint> all,
                                            int dn, int dd) {
  if (full_rank_mod_p(solve, dn, dd)) return std::nullopt;
  const auto cols = static_cast<size_t>(dn + dd + 2);
  Matrix m;
  m.reserve(solve.size());
  for (const auto& pt : solve) {
    m.push_back(system_row(pt, dn, dd));
    remove_row_content(m.back());
  }
  const Echelon e = bareiss_echelon(std::move(m), cols);
  // Nullity must be exactly one; a larger nullspace means the data do not
  // pin down a unique function at these degrees.
  if (e.pivot_cols.size() + 1 != cols) return std::nullopt;
  const std::vector<BigInt> v = null_vector(e, cols);

  std::vector<Rational> pc, qc;
  for (int j = 0; j <= dn; ++j) pc.emplace_back(v[static_cast<size_t>(j)]);
  for (int j = 0; j <= dd; ++j) qc.emplace_back(v[static_cast<size_t>(dn + 1 + j)]);
  Polynomial p(std::move(pc)), q(std::move(qc));
  if (q.is_zero() || !matches_all(p, q, all)) return std::nullopt;
  return RationalFunction(p, q);
}

}  // namespace

FitResult fit_rational(const FitRequest& request) {
  const auto& pts = request.points;
  const int count = static_cast<int>(pts.size());
  const int v = request.verification_points;
  if (v < kMinVerificationPoints) {
    throw DegenerateData("at least " + std::to_string(kMinVerificationPoints) +
                         " verification points are required");
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].n < 1 || (i > 0 && pts[i].n <= pts[i - 1].n)) {
      throw DegenerateData("data points must have positive, strictly increasing n");
    }
  }
  int max_total = request.max_total_degree;
  if (max_total == kAutoDegree) max_total = count - v - 2;
  if (max_total < 0 || count < max_total + 2 + v) {
    throw DegenerateData("need at least max_total_degree + 2 + verification_points = " +
                         std::to_string(std::max(max_total, 0) + 2 + v) +
                         " points, got " + std::to_string(count));
  }

  const std::span<const DataPoint> all(pts);
  const auto solve = all.first(static_cast<size_t>(count - v));
  for (int total = 0; total <= max_total; ++total) {
    for (int dd = 0; dd <= total; ++dd) {
      const int dn = total - dd;
      auto f = try_degrees(solve, all, dn, dd);
      if (!f) continue;
      FitResult result{*f, f->numerator().degree(), f->denominator().degree(),
                       count - v, v};
      if (f->is_zero()) result.numerator_degree = 0;
      return result;
    }
  }
  throw NoFit("no rational function of total degree <= " + std::to_string(max_total) +
              " fits the " + std::to_string(count) + " data points");
}

Rational evaluate_ratfunc(const RationalFunction& f, long n) { return f(Rational(n)); }

std::vector<DataPoint> make_points(long n_first, const std::vector<Rational>& values) {
  std::vector<DataPoint> out;
  out.reserve(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    out.push_back({n_first + static_cast<long>(i), values[i]});
  }
  return out;
}

}  // namespace ssm
