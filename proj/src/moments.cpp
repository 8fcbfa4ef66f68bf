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

#include "ssm/moments.hpp"

#include <atomic>
#include <cassert>
#include <string>
#include <thread>

#include "ssm/errors.hpp"

namespace ssm {
namespace {

// The weight polynomial sum_j w_j x^j has integer coefficients, so theta on it
// stays in cheap integer-valued rationals; dividing by the total at the end
// gives theta^r(P_n)(1).
Polynomial weight_polynomial(const PGFDistribution& pgf) {
  std::vector<Rational> w;
  w.reserve(pgf.weights().size());
  for (const auto& x : pgf.weights()) w.emplace_back(x);
  return Polynomial(std::move(w));
}

Rational sum_at_one(const Polynomial& p) { return p(Rational(1)); }

}  // namespace

const Rational& MomentTable::alpha_or_square(int r) const {
  if (r % 2 == 0) return normalized.even.at(r);
  return normalized.odd_squared.at(r);
}

std::vector<Rational> raw_moments(const PGFDistribution& pgf, int r_max) {
  if (r_max < 0) throw DomainError("moment order must be >= 0");
  const Rational total(pgf.total_matchings());
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(r_max) + 1);
  Polynomial p = weight_polynomial(pgf);
  for (int r = 0; r <= r_max; ++r) {
    if (r > 0) p = p.theta();
    out.push_back(sum_at_one(p) / total);
    assert(out.back() == raw_moment_power_sum(pgf, r));
  }
  return out;
}

Rational raw_moment(const PGFDistribution& pgf, int r) {
  return raw_moments(pgf, r).back();
}

Rational raw_moment_power_sum(const PGFDistribution& pgf, int r) {
  if (r < 0) throw DomainError("moment order must be >= 0");
  Rational acc;
  const auto& probs = pgf.probabilities();
  for (size_t j = 0; j < probs.size(); ++j) {
    if (probs[j].is_zero()) continue;
    acc += Rational(static_cast<long>(j)).pow(static_cast<unsigned>(r)) * probs[j];
  }
  return acc;
}

std::vector<Rational> central_moments(std::span<const Rational> raw) {
  if (raw.empty() || raw[0] != Rational(1)) {
    throw DomainError("raw moment list must start with m_0 = 1");
  }
  std::vector<Rational> central(raw.size());
  central[0] = 1;
  if (raw.size() == 1) return central;
  const Rational shift = -raw[1];
  // shift_pow[e] = (-m_1)^e
  std::vector<Rational> shift_pow(raw.size());
  shift_pow[0] = 1;
  for (size_t e = 1; e < raw.size(); ++e) shift_pow[e] = shift_pow[e - 1] * shift;
  for (size_t r = 1; r < raw.size(); ++r) {
    Rational acc;
    for (size_t i = 0; i <= r; ++i) {
      acc += Rational(binomial(r, i)) * shift_pow[r - i] * raw[i];
    }
    central[r] = acc;
  }
  return central;
}

NormalizedMoments normalized_moments(std::span<const Rational> central) {
  if (central.size() < 3 || central[2].is_zero()) {
    throw DegenerateDistribution("normalized moments need mu_2 > 0");
  }
  const Rational& var = central[2];
  NormalizedMoments out;
  for (size_t r = 2; r < central.size(); ++r) {
    const auto ri = static_cast<int>(r);
    if (r % 2 == 0) {
      out.even[ri] = central[r] / var.pow(static_cast<unsigned>(r / 2));
    } else {
      out.odd_squared[ri] = central[r].pow(2) / var.pow(static_cast<unsigned>(r));
      out.odd_sign[ri] = central[r].sign();
    }
  }
  return out;
}

MomentTable moment_table(const PGFDistribution& pgf, int r_max) {
  if (r_max < 2) throw DomainError("r_max must be >= 2");
  MomentTable t;
  t.n = pgf.n();
  t.r_max = r_max;
  t.raw = raw_moments(pgf, r_max);
  t.central = central_moments(t.raw);
  t.normalized = normalized_moments(t.central);
  return t;
}

MomentTable moment_table(int n, int r_max) { return moment_table(build_pgf(n), r_max); }

std::vector<MomentTable> moment_table_range(int n_min, int n_max, int r_max,
                                            int threads) {
  if (n_min < 1 || n_max < n_min) {
    throw DomainError("invalid n range [" + std::to_string(n_min) + ", " +
                      std::to_string(n_max) + "]");
  }
  if (r_max < 2) throw DomainError("r_max must be >= 2");
  const auto count = static_cast<size_t>(n_max - n_min + 1);
  std::vector<MomentTable> out(count);
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const auto workers = std::min(static_cast<size_t>(threads), count);

  // Larger n cost more, so hand out indices dynamically from the top.
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (size_t i; (i = next.fetch_add(1)) < count && !failed;) {
        const size_t slot = count - 1 - i;
        out[slot] = moment_table(n_min + static_cast<int>(slot), r_max);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ssm
