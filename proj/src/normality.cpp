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

#include "ssm/normality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "ssm/errors.hpp"
#include "ssm/marriage.hpp"

namespace ssm {
namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <typename Body>
void parallel_for(size_t count, int threads, Body body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const size_t workers = std::min(static_cast<size_t>(threads), count);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < count;) body(i);
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
}

RawMomentFit fit_raw_moment(std::span<const MomentTable> tables, int r,
                            const NormalityOptions& options) {
  RawMomentFit out;
  out.r = r;
  FitRequest req;
  req.verification_points = options.verification_points;
  req.points.reserve(tables.size());
  for (const auto& t : tables) {
    req.points.push_back({t.n, t.raw[static_cast<size_t>(r)]});
  }
  try {
    out.fit = fit_rational(req);
  } catch (const NoFit& e) {
    out.error = e.what();
  } catch (const DegenerateData& e) {
    out.error = e.what();
  }
  return out;
}

void record_sign(std::span<const MomentTable> tables, MomentVerdict& v) {
  v.eventual_sign = tables.back().normalized.odd_sign.at(v.r);
  v.sign_stable_from = tables.back().n;
  for (auto it = tables.rbegin(); it != tables.rend(); ++it) {
    if (it->normalized.odd_sign.at(v.r) != v.eventual_sign) break;
    v.sign_stable_from = it->n;
  }
}

MomentVerdict judge_moment(std::span<const MomentTable> tables,
                           std::span<const RationalFunction> raw_functions, int r,
                           int series_order) {
  MomentVerdict v;
  v.r = r;
  const bool odd = r % 2 != 0;
  v.expected_limit = odd ? Rational() : normal_moment(r);
  if (odd) record_sign(tables, v);

  const RationalFunction f = normalized_moment_function(raw_functions, r);
  for (const auto& t : tables) {
    Rational value;
    try {
      value = f(Rational(t.n));
    } catch (const PoleError&) {
      v.diagnostics = "derived function has a pole at n = " + std::to_string(t.n);
      return v;
    }
    if (value != t.alpha_or_square(r)) {
      v.diagnostics = "derived function disagrees with the moment table at n = " +
                      std::to_string(t.n);
      return v;
    }
  }
  v.fitted_function = f;
  v.series = expand_asymptotic(f, series_order);
  v.limit = series_limit(*v.series);
  if (odd) {
    v.pass = v.limit->kind == LimitKind::kZero;
  } else {
    v.pass = v.limit->kind == LimitKind::kFinite && v.limit->value == v.expected_limit;
  }
  if (!v.pass) {
    v.diagnostics = "limit is " + to_string(v.limit->kind) +
                    (v.limit->kind == LimitKind::kFinite ? " " + v.limit->value.str() : "") +
                    ", expected " + v.expected_limit.str();
  }
  return v;
}

}  // namespace

Rational normal_moment(int r) {
  if (r < 0) throw DomainError("moment order must be >= 0");
  if (r % 2 != 0) return Rational();
  const auto half = static_cast<unsigned long>(r / 2);
  BigInt denom = factorial(half);
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), half);
  return Rational(factorial(static_cast<unsigned long>(r)), denom);
}

RationalFunction central_moment_function(std::span<const RationalFunction> raw, int r) {
  if (r < 0 || static_cast<size_t>(r) > raw.size()) {
    throw DomainError("central_moment_function: order " + std::to_string(r) +
                      " needs raw moments up to m_" + std::to_string(r));
  }
  if (r == 0) return RationalFunction::constant(1);
  const RationalFunction shift = -raw[0];
  RationalFunction acc;
  RationalFunction shift_pow = RationalFunction::constant(1);  // (-m_1)^(r-i)
  // i runs downward so the shift power grows with each step.
  for (int i = r; i >= 0; --i) {
    const RationalFunction mi =
        i == 0 ? RationalFunction::constant(1) : raw[static_cast<size_t>(i - 1)];
    const Rational c(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i)));
    acc = acc + RationalFunction::constant(c) * shift_pow * mi;
    if (i > 0) shift_pow = shift_pow * shift;
  }
  return acc;
}

RationalFunction normalized_moment_function(std::span<const RationalFunction> raw, int r) {
  if (r < 2) throw DomainError("normalized moments start at r = 2");
  const RationalFunction var = central_moment_function(raw, 2);
  const RationalFunction mu = central_moment_function(raw, r);
  if (r % 2 == 0) return mu / var.pow(static_cast<unsigned>(r / 2));
  return mu.pow(2) / var.pow(static_cast<unsigned>(r));
}

NormalityReport verify_normality(int n_max, int r_max, int series_order,
                                 const NormalityOptions& options) {
  if (r_max < 3) throw DomainError("r_max must be >= 3");
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  const auto tables = moment_table_range(1, n_max, r_max, options.threads);
  return verify_normality(tables, r_max, series_order, options);
}

NormalityReport verify_normality(std::span<const MomentTable> tables, int r_max,
                                 int series_order, const NormalityOptions& options) {
  if (r_max < 3) throw DomainError("r_max must be >= 3");
  if (series_order < 0) throw DomainError("series order must be >= 0");
  if (tables.empty()) throw DomainError("no moment tables supplied");
  for (size_t i = 0; i < tables.size(); ++i) {
    if (tables[i].n != static_cast<int>(i) + 1 || tables[i].r_max < r_max) {
      throw DomainError("moment tables must cover n = 1..n_max up to order r_max");
    }
  }

  NormalityReport report;
  report.n_max = static_cast<int>(tables.size());
  report.r_max = r_max;
  report.series_order = series_order;
  report.raw_fits.resize(static_cast<size_t>(r_max));
  parallel_for(static_cast<size_t>(r_max), options.threads, [&](size_t i) {
    report.raw_fits[i] = fit_raw_moment(tables, static_cast<int>(i) + 1, options);
  });

  // Moments up to the first failed raw fit can be derived.
  std::vector<RationalFunction> raw_functions;
  std::string first_error;
  for (const auto& rf : report.raw_fits) {
    if (!rf.fit) {
      first_error = "raw moment m_" + std::to_string(rf.r) + " not fitted: " + rf.error;
      break;
    }
    raw_functions.push_back(rf.fit->function);
  }

  const auto count = static_cast<size_t>(r_max - 2);
  report.per_moment.resize(count);
  parallel_for(count, options.threads, [&](size_t i) {
    const int r = static_cast<int>(i) + 3;
    if (static_cast<size_t>(r) > raw_functions.size()) {
      MomentVerdict v;
      v.r = r;
      v.expected_limit = r % 2 ? Rational() : normal_moment(r);
      v.diagnostics = first_error;
      report.per_moment[i] = std::move(v);
      return;
    }
    report.per_moment[i] = judge_moment(tables, raw_functions, r, series_order);
  });

  report.overall = std::all_of(report.per_moment.begin(), report.per_moment.end(),
                               [](const MomentVerdict& v) { return v.pass; });
  return report;
}

LocalLimitDiscrepancy distribution_vs_normal(int n) {
  const PGFDistribution pgf = build_pgf(n);
  const double mean = mean_formula(n).to_double();
  const double sd = std::sqrt(variance_formula(n).to_double());
  const double scale = 2.0 / (sd * std::sqrt(2.0 * std::numbers::pi));
  LocalLimitDiscrepancy out;
  const auto& probs = pgf.probabilities();
  for (size_t j = 0; j < probs.size(); j += 2) {
    const double z = (static_cast<double>(j) - mean) / sd;
    const double density = scale * std::exp(-0.5 * z * z);
    const double diff = std::abs(probs[j].to_double() - density);
    if (diff > out.sup_discrepancy) {
      out.sup_discrepancy = diff;
      out.at_value = static_cast<int>(j);
    }
  }
  return out;
}

}  // namespace ssm
