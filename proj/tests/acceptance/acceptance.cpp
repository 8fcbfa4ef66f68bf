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

// End-to-end checks of the closed forms, series and normality results. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ssm/asymptotics.hpp"
#include "ssm/guesser.hpp"
#include "ssm/marriage.hpp"
#include "ssm/moments.hpp"
#include "ssm/normality.hpp"
#include "ssm/oracle.hpp"

namespace {

using ssm::Polynomial;
using ssm::Rational;
using ssm::RationalFunction;

std::vector<Rational> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

// Failure detail for the current criterion; empty means pass.
struct Check {
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok && detail.empty()) detail = what;
  }
};

bool same_prefix(const ssm::AsymptoticSeries& s, int exponent,
                 const std::vector<Rational>& expected) {
  if (s.leading_exponent != exponent || s.coefficients.size() < expected.size()) return false;
  return std::equal(expected.begin(), expected.end(), s.coefficients.begin());
}

std::string describe(const ssm::AsymptoticSeries& s) { return s.str("n", true); }

// Tables n = 1..60 up to order 14, shared by criteria 5-8.
const std::vector<ssm::MomentTable>& tables() {
  static const auto t = ssm::moment_table_range(1, 60, 14);
  return t;
}

ssm::FitResult fit_alpha(int r) {
  ssm::FitRequest req;
  for (const auto& t : tables()) req.points.push_back({t.n, t.alpha_or_square(r)});
  return ssm::fit_rational(req);
}

const ssm::NormalityReport& report() {
  static const auto rep = ssm::verify_normality(tables(), 14, ssm::kDefaultSeriesOrder);
  return rep;
}

// The derived function from the order-14 run must agree with a direct fit.
void expect_matches_derived(Check& c, int r, const RationalFunction& direct) {
  const auto& v = report().per_moment.at(static_cast<size_t>(r - 3));
  c.expect(v.fitted_function && *v.fitted_function == direct,
           "direct fit of moment " + std::to_string(r) +
               " differs from the one derived from raw moments");
}

std::string mean_closed_form() {
  Check c;
  for (int n = 1; n <= 200; ++n) {
    const Rational m1 = ssm::raw_moment(ssm::build_pgf(n), 1);
    const Rational expected(ssm::BigInt(2 * n) * (2 * n - 1), ssm::BigInt(4 * n - 1));
    c.expect(m1 == expected, "n=" + std::to_string(n) + ": m_1=" + m1.str());
  }
  return c.detail;
}

std::string variance_closed_form() {
  Check c;
  for (int n = 1; n <= 200; ++n) {
    const auto central = ssm::central_moments(ssm::raw_moments(ssm::build_pgf(n), 2));
    const ssm::BigInt N = n;
    const Rational expected(8 * N * N * (4 * N * N - 4 * N + 1),
                            64 * N * N * N - 80 * N * N + 28 * N - 3);
    c.expect(central[2] == expected, "n=" + std::to_string(n) + ": mu_2=" + central[2].str());
  }
  return c.detail;
}

ssm::FitResult fit_table(int r, bool central) {
  ssm::FitRequest req;
  for (const auto& t : tables()) {
    req.points.push_back({t.n, central ? t.central[static_cast<size_t>(r)]
                                       : t.raw[static_cast<size_t>(r)]});
  }
  return ssm::fit_rational(req);
}

std::string mean_asymptotics() {
  Check c;
  const auto fit = fit_table(1, false);
  c.expect(fit.function == ssm::mean_function(), "fitted mean " + fit.function.str("n"));
  // Ten terms, n^1 .. n^-8, with remainder O(n^-9).
  const auto s = ssm::expand_asymptotic(fit.function, 9);
  c.expect(same_prefix(s, 1, parse_all({"1", "-1/4", "-1/16", "-1/64", "-1/256", "-1/1024",
                                        "-1/4096", "-1/16384", "-1/65536", "-1/262144"})) &&
               s.remainder_exponent() == -9,
           describe(s));
  return c.detail;
}

std::string variance_asymptotics() {
  Check c;
  const auto fit = fit_table(2, true);
  c.expect(fit.function == ssm::variance_function(), "fitted variance " + fit.function.str("n"));
  const auto s = ssm::expand_asymptotic(fit.function, 9);
  c.expect(same_prefix(s, 1, parse_all({"1/2", "1/8", "1/16", "3/64", "19/512", "59/2048",
                                        "45/2048", "17/1024", "1637/131072",
                                        "4917/524288"})) &&
               s.remainder_exponent() == -9,
           describe(s));
  return c.detail;
}

std::string skewness() {
  Check c;
  const auto fit = fit_alpha(3);
  // Square of the closed form alpha_3: (1/2)(4n-3) / (n^2 (64n^4-224n^3+276n^2-140n+25)).
  const RationalFunction reference(Polynomial({-3, 4}),
                                 Polynomial({0, 0, 50, -280, 552, -448, 128}));
  c.expect(fit.function == reference, "fitted alpha_3^2 " + fit.function.str("n"));
  for (const auto& t : tables()) {
    c.expect(reference(Rational(t.n)) == t.alpha_or_square(3), "table mismatch at n=" +
                                                                  std::to_string(t.n));
  }
  const auto s = ssm::expand_asymptotic(fit.function, 4);
  c.expect(same_prefix(s, -5, parse_all({"1/32", "11/128", "85/512", "571/2048", "3569/8192"})),
           describe(s));
  expect_matches_derived(c, 3, fit.function);
  return c.detail;
}

std::string kurtosis() {
  Check c;
  const auto fit = fit_alpha(4);
  const RationalFunction reference =
      RationalFunction::constant(Rational::parse("1/2")) *
      RationalFunction(Polynomial({3, -100, 650, -1896, 2632, -1664, 384}),
                       Polynomial({0, 0, 35, -188, 348, -256, 64}));
  c.expect(fit.function == reference, "fitted alpha_4 " + fit.function.str("n"));
  c.expect(fit.function.numerator() == reference.numerator() &&
               fit.function.denominator() == reference.denominator(),
           "canonical coefficients differ");
  const auto s = ssm::expand_asymptotic(fit.function, 9);
  c.expect(same_prefix(s, 0, parse_all({"3", "-1", "1/4", "7/16", "57/64", "431/256",
                                        "3137/1024", "22431/4096", "159025/16384",
                                        "1122319/65536"})),
           describe(s));
  expect_matches_derived(c, 4, fit.function);
  return c.detail;
}

std::string fifth_and_sixth() {
  Check c;
  const auto fit5 = fit_alpha(5);
  const auto s5 = ssm::expand_asymptotic(fit5.function, 4);
  c.expect(same_prefix(s5, -5, parse_all({"25/8", "315/32", "3501/128", "37067/512",
                                          "383273/2048"})),
           "alpha_5^2: " + describe(s5));
  expect_matches_derived(c, 5, fit5.function);
  const auto fit6 = fit_alpha(6);
  const auto s6 = ssm::expand_asymptotic(fit6.function, 9);
  c.expect(same_prefix(s6, 0, parse_all({"15", "-15", "31/4", "73/16", "839/64", "8401/256",
                                         "86191/1024", "903617/4096", "9635359/16384",
                                         "103978545/65536"})),
           "alpha_6: " + describe(s6));
  expect_matches_derived(c, 6, fit6.function);
  return c.detail;
}

std::string normality_to_fourteen() {
  Check c;
  const auto rep = ssm::verify_normality(60, 14, ssm::kDefaultSeriesOrder);
  c.expect(rep.per_moment.size() == 12, "expected verdicts for r = 3..14");
  for (const auto& v : rep.per_moment) {
    c.expect(v.pass, "r=" + std::to_string(v.r) + ": " + v.diagnostics);
    const Rational expected = v.r % 2 ? Rational() : ssm::normal_moment(v.r);
    c.expect(v.limit && v.limit->value == expected && v.expected_limit == expected,
             "r=" + std::to_string(v.r) + ": wrong limit");
  }
  const std::vector<long> even{3, 15, 105, 945, 10395, 135135};
  for (size_t i = 0; i < even.size(); ++i) {
    c.expect(ssm::normal_moment(4 + 2 * static_cast<int>(i)) == Rational(even[i]),
             "normal moment table");
  }
  c.expect(rep.overall, "overall verdict is fail");
  return c.detail;
}

std::string oracle_equivalence() {
  Check c;
  for (int n = 1; n <= 4; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto d = ssm::enumerate_matchings(n);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto pgf = ssm::build_pgf(n);
    c.expect(d.total == ssm::odd_double_factorial(2 * n), "total at n=" + std::to_string(n));
    for (size_t j = 0; j < pgf.probabilities().size(); ++j) {
      const auto it = d.counts.find(static_cast<int>(j));
      const ssm::BigInt count = it == d.counts.end() ? ssm::BigInt(0) : it->second;
      c.expect(Rational(count, d.total) == pgf.probabilities()[j],
               "n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
    if (n == 4) {
      c.expect(d.total == 2027025, "n=4 total");
      c.expect(secs < 30.0, "n=4 took " + std::to_string(secs) + " s");
    }
  }
  return c.detail;
}

std::string serialize(const ssm::SampleSummary& s) {
  std::ostringstream os;
  os << std::hexfloat;
  for (const auto& [x, k] : s.empirical_counts) os << x << ':' << k << ';';
  for (double m : s.empirical_moments) os << m << ';';
  return os.str();
}

std::string monte_carlo() {
  Check c;
  const std::int64_t trials = 100000;
  const auto a = ssm::sample_matchings(50, trials, 20260101, 4);
  const auto b = ssm::sample_matchings(50, trials, 20260101, 4);
  const double mean = ssm::mean_formula(50).to_double();
  const double sigma = std::sqrt(ssm::variance_formula(50).to_double());
  const double tolerance = 5 * sigma / std::sqrt(static_cast<double>(trials));
  c.expect(std::abs(a.empirical_moments[0] - mean) <= tolerance,
           "empirical mean " + std::to_string(a.empirical_moments[0]) + " vs " +
               std::to_string(mean));
  c.expect(serialize(a) == serialize(b), "replay differs");
  return c.detail;
}

std::string guesser_round_trip() {
  Check c;
  std::mt19937_64 rng(11);
  auto coefficient = [&rng] { return std::uniform_int_distribution<long>(-1000, 1000)(rng); };
  auto degree = [&rng] { return std::uniform_int_distribution<int>(0, 6)(rng); };
  auto poly = [&](int d) {
    std::vector<Rational> cs(static_cast<size_t>(d) + 1);
    for (auto& x : cs) x = Rational(coefficient());
    while (cs.back().is_zero()) cs.back() = Rational(coefficient());
    return Polynomial(std::move(cs));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const RationalFunction f(poly(degree()), poly(degree()));
    ssm::FitRequest req;
    req.verification_points = 8;
    for (long n = 1; req.points.size() < 24; ++n) {
      if (f.denominator()(Rational(n)).is_zero()) continue;
      req.points.push_back({n, f(Rational(n))});
    }
    try {
      const auto fit = ssm::fit_rational(req);
      c.expect(fit.function == f, "trial " + std::to_string(trial) + ": got " +
                                      fit.function.str("n") + ", want " + f.str("n"));
    } catch (const std::exception& e) {
      c.expect(false, "trial " + std::to_string(trial) + ": " + e.what());
    }
  }
  return c.detail;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria{
      {"mean closed form, n = 1..200", mean_closed_form},
      {"variance closed form, n = 1..200", variance_closed_form},
      {"mean asymptotic series", mean_asymptotics},
      {"variance asymptotic series", variance_asymptotics},
      {"alpha_3^2 closed form and series", skewness},
      {"alpha_4 closed form and series", kurtosis},
      {"alpha_5^2 and alpha_6 series", fifth_and_sixth},
      {"normalized moments 3..14 tend to normal moments", normality_to_fourteen},
      {"enumeration matches the generating function, n = 1..4", oracle_equivalence},
      {"Monte Carlo mean at n = 50 and replay", monte_carlo},
      {"guesser recovers 100 random rational functions", guesser_round_trip},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool ok = detail.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %s  (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", index, name,
                static_cast<long long>(ms), ok ? "" : "\n        ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
