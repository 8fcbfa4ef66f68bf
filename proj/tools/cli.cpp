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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "moment_cache.hpp"
#include "ssm/asymptotics.hpp"
#include "ssm/errors.hpp"
#include "ssm/guesser.hpp"
#include "ssm/marriage.hpp"
#include "ssm/moments.hpp"
#include "ssm/normality.hpp"
#include "ssm/oracle.hpp"
#include "ssm/version.hpp"

namespace ssm::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "plain";
  std::string out;
  std::string cache_dir;
  int threads = 0;
  std::uint64_t seed = 1;
};

// What a subcommand hands back for rendering.
struct Output {
  json parameters = json::object();
  json results = json::object();
  std::string plain;
  std::string csv;
  bool verification_failed = false;
};

std::string exact(const Rational& q) { return q.fraction_str(); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

json coefficient_list(std::span<const Rational> cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(exact(c));
  return a;
}

json function_json(const RationalFunction& f) {
  return json{{"text", f.str("n")},
              {"numerator", coefficient_list(f.numerator().coefficients())},
              {"denominator", coefficient_list(f.denominator().coefficients())}};
}

json series_json(const AsymptoticSeries& s) {
  json j{{"leading_exponent", s.leading_exponent},
         {"coefficients", coefficient_list(s.coefficients)},
         {"text", s.str("n", true)}};
  if (!s.is_zero) j["remainder_exponent"] = s.remainder_exponent();
  return j;
}

std::string join(std::span<const Rational> cs, const std::string& sep, bool as_fraction) {
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += sep;
    out += as_fraction ? exact(cs[i]) : cs[i].str();
  }
  return out;
}

std::unique_ptr<MomentCache> open_cache(const Globals& g) {
  if (g.cache_dir.empty()) return nullptr;
  return std::make_unique<MomentCache>(g.cache_dir);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// pgf ------------------------------------------------------------------------

Output cmd_pgf(int n) {
  require(n >= 1, "--n must be >= 1");
  const PGFDistribution d = build_pgf(n);
  Output o;
  o.parameters = {{"n", n}};
  json rows = json::array();
  std::ostringstream plain, csv;
  plain << "j\tP(X = j)\n";
  csv << "value,probability\n";
  const auto& p = d.probabilities();
  for (size_t j = 0; j < p.size(); j += 2) {
    rows.push_back({{"value", j}, {"probability", exact(p[j])}});
    plain << j << '\t' << p[j].str() << '\n';
    csv << j << ',' << quoted(exact(p[j])) << '\n';
  }
  o.results = {{"total_matchings", d.total_matchings().get_str()},
               {"coefficients", coefficient_list(p)},
               {"distribution", rows}};
  o.plain = plain.str();
  o.csv = csv.str();
  return o;
}

// moments --------------------------------------------------------------------

std::vector<std::string> moment_columns(int r_max) {
  std::vector<std::string> cols{"n"};
  for (int r = 1; r <= r_max; ++r) cols.push_back("m_" + std::to_string(r));
  for (int r = 2; r <= r_max; ++r) cols.push_back("mu_" + std::to_string(r));
  for (int r = 3; r <= r_max; ++r) {
    cols.push_back("alpha" + std::to_string(r) + (r % 2 ? "_sq" : ""));
  }
  return cols;
}

std::vector<Rational> moment_row(const MomentTable& t) {
  std::vector<Rational> row;
  for (int r = 1; r <= t.r_max; ++r) row.push_back(t.raw[static_cast<size_t>(r)]);
  for (int r = 2; r <= t.r_max; ++r) row.push_back(t.central[static_cast<size_t>(r)]);
  for (int r = 3; r <= t.r_max; ++r) row.push_back(t.alpha_or_square(r));
  return row;
}

Output cmd_moments(const Globals& g, int n_min, int n_max, int r_max) {
  require(n_min >= 1 && n_max >= n_min, "need 1 <= --n-min <= --n-max");
  require(r_max >= 2, "--r-max must be >= 2");
  auto cache = open_cache(g);
  const auto tables = cached_moment_tables(cache.get(), n_min, n_max, r_max, g.threads);
  Output o;
  o.parameters = {{"n_min", n_min}, {"n_max", n_max}, {"r_max", r_max}};
  const auto cols = moment_columns(r_max);
  std::ostringstream plain, csv;
  for (size_t i = 0; i < cols.size(); ++i) {
    plain << (i ? "\t" : "") << cols[i];
    csv << (i ? "," : "") << cols[i];
  }
  plain << '\n';
  csv << '\n';
  json rows = json::array();
  for (const auto& t : tables) {
    const auto values = moment_row(t);
    json row{{"n", t.n}};
    plain << t.n;
    csv << t.n;
    for (size_t i = 0; i < values.size(); ++i) {
      row[cols[i + 1]] = exact(values[i]);
      plain << '\t' << values[i].str();
      csv << ',' << quoted(exact(values[i]));
    }
    plain << '\n';
    csv << '\n';
    rows.push_back(std::move(row));
  }
  o.results = {{"columns", cols}, {"rows", rows}};
  o.plain = plain.str();
  o.csv = csv.str();
  return o;
}

// fit / asympt -----------------------------------------------------------------

struct Target {
  enum Kind { kRaw, kCentral, kAlpha } kind;
  int r;
  std::string label;
};

Target parse_target(const std::string& text) {
  if (text == "mean") return {Target::kRaw, 1, "mean"};
  if (text == "variance") return {Target::kCentral, 2, "variance"};
  const auto colon = text.find(':');
  require(colon != std::string::npos,
          "--target must be mean, variance, raw:R, central:R or alpha:R");
  const std::string kind = text.substr(0, colon);
  int r = 0;
  try {
    size_t used = 0;
    r = std::stoi(text.substr(colon + 1), &used);
    require(used == text.size() - colon - 1, "bad moment order in --target");
  } catch (const std::logic_error&) {
    throw UsageError("bad moment order in --target '" + text + "'");
  }
  if (kind == "raw") {
    require(r >= 1, "raw moments start at 1");
    return {Target::kRaw, r, "m_" + std::to_string(r)};
  }
  if (kind == "central") {
    require(r >= 2, "central moments start at 2");
    return {Target::kCentral, r, "mu_" + std::to_string(r)};
  }
  if (kind == "alpha") {
    require(r >= 3, "normalized moments start at 3");
    return {Target::kAlpha, r, "alpha" + std::to_string(r) + (r % 2 ? "_sq" : "")};
  }
  throw UsageError("unknown --target kind '" + kind + "'");
}

const Rational& target_value(const MomentTable& t, const Target& target) {
  switch (target.kind) {
    case Target::kRaw:
      return t.raw[static_cast<size_t>(target.r)];
    case Target::kCentral:
      return t.central[static_cast<size_t>(target.r)];
    case Target::kAlpha:
      break;
  }
  return t.alpha_or_square(target.r);
}

struct FitArgs {
  std::string target = "mean";
  int n_min = 1;
  int n_max = kDefaultVerifyNMax;
  int max_degree = kAutoDegree;
  int verify_points = 0;  // 0: a third of the points, between 4 and 10
};

json fit_parameters(const FitArgs& a, int verify_points) {
  return {{"target", a.target},
          {"n_min", a.n_min},
          {"n_max", a.n_max},
          {"max_total_degree", a.max_degree == kAutoDegree ? json("auto") : json(a.max_degree)},
          {"verification_points", verify_points}};
}

FitResult run_fit(const Globals& g, const FitArgs& a, const Target& target, int& verify_points) {
  require(a.n_min >= 1 && a.n_max >= a.n_min, "need 1 <= --n-min <= --n-max");
  const int count = a.n_max - a.n_min + 1;
  verify_points = a.verify_points > 0
                      ? a.verify_points
                      : std::clamp(count / 3, kMinVerificationPoints, kDefaultVerificationPoints);
  auto cache = open_cache(g);
  const int r_max = std::max(target.r, 2);
  const auto tables = cached_moment_tables(cache.get(), a.n_min, a.n_max, r_max, g.threads);
  FitRequest req;
  req.max_total_degree = a.max_degree;
  req.verification_points = verify_points;
  for (const auto& t : tables) req.points.push_back({t.n, target_value(t, target)});
  return fit_rational(req);
}

json fit_json(const FitResult& f) {
  return {{"function", function_json(f.function)},
          {"numerator_degree", f.numerator_degree},
          {"denominator_degree", f.denominator_degree},
          {"points_used", f.points_used},
          {"verified_on", f.verified_on}};
}

Output cmd_fit(const Globals& g, const FitArgs& a) {
  const Target target = parse_target(a.target);
  int v = 0;
  const FitResult f = run_fit(g, a, target, v);
  Output o;
  o.parameters = fit_parameters(a, v);
  o.results = fit_json(f);
  o.results["quantity"] = target.label;
  o.plain = f.function.str("n") + "\n";
  o.csv = "quantity,numerator_degree,denominator_degree,function\n" + target.label + "," +
          std::to_string(f.numerator_degree) + "," + std::to_string(f.denominator_degree) +
          "," + quoted(f.function.str("n")) + "\n";
  return o;
}

Output cmd_asympt(const Globals& g, const FitArgs& a, int order) {
  require(order >= 0, "--order must be >= 0");
  const Target target = parse_target(a.target);
  int v = 0;
  const FitResult f = run_fit(g, a, target, v);
  const AsymptoticSeries s = expand_asymptotic(f.function, order);
  const SeriesLimit lim = series_limit(s);
  Output o;
  o.parameters = fit_parameters(a, v);
  o.parameters["order"] = order;
  o.results = {{"quantity", target.label},
               {"function", function_json(f.function)},
               {"series", series_json(s)},
               {"limit", {{"kind", to_string(lim.kind)}, {"value", exact(lim.value)}}}};
  o.plain = s.str("n", true) + "\n";
  o.csv = "power,coefficient\n";
  for (size_t j = 0; j < s.coefficients.size(); ++j) {
    o.csv += std::to_string(s.leading_exponent - static_cast<int>(j)) + "," +
             quoted(exact(s.coefficients[j])) + "\n";
  }
  return o;
}

// verify -----------------------------------------------------------------------

std::string quantity(int r) { return "alpha" + std::to_string(r) + (r % 2 ? "_sq" : ""); }

json verdict_json(const MomentVerdict& v) {
  json j{{"r", v.r}, {"quantity", quantity(v.r)}};
  j["fitted_function"] = v.fitted_function ? function_json(*v.fitted_function) : json(nullptr);
  j["series"] = v.series ? series_json(*v.series) : json(nullptr);
  j["limit"] = v.limit ? json{{"kind", to_string(v.limit->kind)},
                              {"value", exact(v.limit->value)}}
                       : json(nullptr);
  j["expected_limit"] = exact(v.expected_limit);
  j["verdict"] = v.pass ? "pass" : "fail";
  if (v.r % 2) {
    j["central_moment_sign"] = {{"eventual_sign", v.eventual_sign},
                                {"stable_from_n", v.sign_stable_from}};
  }
  j["diagnostics"] = v.diagnostics;
  return j;
}

Output cmd_verify(const Globals& g, int n_max, int r_max, int order) {
  require(r_max >= 3, "--r-max must be >= 3");
  require(n_max >= 1, "--n-max must be >= 1");
  require(order >= 0, "--order must be >= 0");
  auto cache = open_cache(g);
  const auto tables = cached_moment_tables(cache.get(), 1, n_max, r_max, g.threads);
  NormalityOptions opts;
  opts.threads = g.threads;
  const NormalityReport rep = verify_normality(tables, r_max, order, opts);

  Output o;
  o.parameters = {{"n_max", n_max}, {"r_max", r_max}, {"order", order}};
  json raw = json::array();
  for (const auto& f : rep.raw_fits) {
    json j{{"r", f.r}};
    if (f.fit) {
      j["numerator_degree"] = f.fit->numerator_degree;
      j["denominator_degree"] = f.fit->denominator_degree;
      j["function"] = function_json(f.fit->function);
    } else {
      j["error"] = f.error;
    }
    raw.push_back(std::move(j));
  }
  json moments = json::array();
  std::ostringstream plain, csv;
  plain << "normalized moments r = 3.." << r_max << " from n = 1.." << n_max
        << ", series order " << order << "\n";
  csv << "r,quantity,limit_kind,limit,expected_limit,verdict,series_leading_exponent,"
         "series_coefficients\n";
  for (const auto& v : rep.per_moment) {
    moments.push_back(verdict_json(v));
    const std::string limit = v.limit ? (v.limit->kind == LimitKind::kFinite ||
                                                 v.limit->kind == LimitKind::kZero
                                             ? v.limit->value.str()
                                             : to_string(v.limit->kind))
                                      : "-";
    plain << "  " << (v.pass ? "PASS" : "FAIL") << "  " << quantity(v.r) << " -> " << limit
          << " (expected " << v.expected_limit.str() << ")\n";
    if (v.series) plain << "        " << v.series->str("n", true) << "\n";
    if (v.r % 2 && v.eventual_sign != 0) {
      plain << "        mu_" << v.r << (v.eventual_sign < 0 ? " < 0" : " > 0")
            << " for n >= " << v.sign_stable_from << "\n";
    }
    if (!v.diagnostics.empty()) plain << "        " << v.diagnostics << "\n";
    csv << v.r << ',' << quantity(v.r) << ','
        << (v.limit ? to_string(v.limit->kind) : "") << ','
        << (v.limit ? quoted(exact(v.limit->value)) : "") << ','
        << quoted(exact(v.expected_limit)) << ',' << (v.pass ? "pass" : "fail") << ','
        << (v.series ? std::to_string(v.series->leading_exponent) : "") << ','
        << (v.series ? quoted(join(v.series->coefficients, ";", true)) : "") << '\n';
  }
  plain << "overall: " << (rep.overall ? "PASS" : "FAIL") << "\n";
  o.results = {{"overall", rep.overall ? "pass" : "fail"},
               {"raw_moment_fits", raw},
               {"moments", moments}};
  o.plain = plain.str();
  o.csv = csv.str();
  o.verification_failed = !rep.overall;
  return o;
}

// oracle / sample --------------------------------------------------------------

Output cmd_oracle(const Globals& g, int n, bool allow_large) {
  require(n >= 1, "--n must be >= 1");
  const auto d = enumerate_matchings(n, allow_large, g.threads);
  Output o;
  o.parameters = {{"n", n}, {"allow_large", allow_large}};
  json counts = json::array();
  std::ostringstream plain, csv;
  plain << "j\tcount\n";
  csv << "value,count\n";
  for (const auto& [j, c] : d.counts) {
    counts.push_back({{"value", j}, {"count", c.get_str()}});
    plain << j << '\t' << c.get_str() << '\n';
    csv << j << ',' << c.get_str() << '\n';
  }
  plain << "total\t" << d.total.get_str() << '\n';
  o.results = {{"total", d.total.get_str()}, {"counts", counts}};
  o.plain = plain.str();
  o.csv = csv.str();
  return o;
}

// Shortest text that reads back as the same double.
std::string decimal(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

Output cmd_sample(const Globals& g, int n, std::int64_t trials, int workers) {
  require(n >= 1, "--n must be >= 1");
  require(trials >= 1, "--trials must be >= 1");
  require(workers >= 1, "--workers must be >= 1");
  const SampleSummary s = sample_matchings(n, trials, g.seed, workers);
  Output o;
  o.parameters = {{"n", n}, {"trials", trials}, {"seed", g.seed}, {"workers", workers}};
  json counts = json::array();
  std::ostringstream plain, csv;
  plain << "j\tcount\n";
  csv << "value,count\n";
  for (const auto& [j, c] : s.empirical_counts) {
    counts.push_back({{"value", j}, {"count", c}});
    plain << j << '\t' << c << '\n';
    csv << j << ',' << c << '\n';
  }
  json moments = json::object();
  for (size_t r = 0; r < s.empirical_moments.size(); ++r) {
    moments["m_" + std::to_string(r + 1)] = decimal(s.empirical_moments[r]);
    plain << "m_" << r + 1 << '\t' << decimal(s.empirical_moments[r]) << '\n';
  }
  const double mean = mean_formula(n).to_double();
  const double sd = std::sqrt(variance_formula(n).to_double());
  const double z = (s.empirical_moments[0] - mean) / (sd / std::sqrt(static_cast<double>(trials)));
  plain << "z-score of the mean\t" << decimal(z) << '\n';
  o.results = {{"generator", s.generator},
               {"counts", counts},
               {"empirical_moments", moments},
               {"exact_mean", exact(mean_formula(n))},
               {"mean_z_score", decimal(z)}};
  o.plain = plain.str();
  o.csv = csv.str();
  return o;
}

// driver -------------------------------------------------------------------------

void emit(const Globals& g, const std::string& command, const Output& o, double ms,
          std::ostream& out) {
  std::string body;
  if (g.format == "json") {
    json report{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"parameters", o.parameters},
                {"results", o.results},
                {"artifact_version", kArtifactVersion},
                {"timing_ms", ms}};
    body = report.dump(2) + "\n";
  } else {
    body = g.format == "csv" ? o.csv : o.plain;
  }
  if (g.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(g.out, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + g.out + "'");
  file << body;
  if (!file.flush()) throw std::runtime_error("cannot write output file '" + g.out + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments and asymptotic normality of same-sex marriage counts", "ssm"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--cache-dir", g.cache_dir, "Directory for cached moment tables");
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for the sample subcommand");

  std::function<Output()> action;
  std::string command;
  auto on = [&](CLI::App* sub, std::function<Output()> f) {
    sub->callback([&, sub, f] {
      command = sub->get_name();
      action = f;
    });
  };

  int pgf_n = 1;
  auto* pgf = app.add_subcommand("pgf", "Exact distribution of the same-sex pair count");
  pgf->add_option("--n", pgf_n, "Number of men (= number of women) is 2n")->required();
  on(pgf, [&] { return cmd_pgf(pgf_n); });

  int m_min = 1, m_max = 200, m_r = kDefaultMaxMomentOrder;
  auto* moments = app.add_subcommand("moments", "Table of raw, central and normalized moments");
  moments->add_option("--n-min", m_min, "First n")->capture_default_str();
  moments->add_option("--n-max", m_max, "Last n")->capture_default_str();
  moments->add_option("--r-max", m_r, "Highest moment order")->capture_default_str();
  on(moments, [&] { return cmd_moments(g, m_min, m_max, m_r); });

  FitArgs fa;
  int order = kDefaultSeriesOrder;
  auto add_fit_options = [&fa](CLI::App* sub) {
    sub->add_option("--target", fa.target, "mean, variance, raw:R, central:R or alpha:R")
        ->capture_default_str();
    sub->add_option("--n-min", fa.n_min, "First n of the data")->capture_default_str();
    sub->add_option("--n-max", fa.n_max, "Last n of the data")->capture_default_str();
    sub->add_option("--max-degree", fa.max_degree, "Largest total degree (-1: auto)");
    sub->add_option("--verify-points", fa.verify_points,
                    "Trailing points used only for verification (0: auto)");
  };
  auto* fit = app.add_subcommand("fit", "Guess a rational function of n for a moment");
  add_fit_options(fit);
  on(fit, [&] { return cmd_fit(g, fa); });

  auto* asympt = app.add_subcommand("asympt", "Asymptotic series of a fitted moment");
  add_fit_options(asympt);
  asympt->add_option("--order", order, "Number of terms after the leading one")
      ->capture_default_str();
  on(asympt, [&] { return cmd_asympt(g, fa, order); });

  int v_n = kDefaultVerifyNMax, v_r = kDefaultMaxMomentOrder, v_order = kDefaultSeriesOrder;
  auto* verify = app.add_subcommand("verify", "Check normalized moments against the normal law");
  verify->add_option("--n-max", v_n, "Data range is n = 1..n_max")->capture_default_str();
  verify->add_option("--r-max", v_r, "Highest moment order")->capture_default_str();
  verify->add_option("--order", v_order, "Series order")->capture_default_str();
  on(verify, [&] { return cmd_verify(g, v_n, v_r, v_order); });

  int o_n = 1;
  bool allow_large = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration of all matchings");
  oracle->add_option("--n", o_n, "Number of men (= number of women) is 2n")->required();
  oracle->add_flag("--allow-large", allow_large, "Permit n above the default limit");
  on(oracle, [&] { return cmd_oracle(g, o_n, allow_large); });

  int s_n = 1, s_workers = 1;
  std::int64_t s_trials = 100000;
  auto* sample = app.add_subcommand("sample", "Monte Carlo sampling of uniform matchings");
  sample->add_option("--n", s_n, "Number of men (= number of women) is 2n")->required();
  sample->add_option("--trials", s_trials, "Number of sampled matchings")->capture_default_str();
  sample->add_option("--workers", s_workers, "Independent random streams")
      ->capture_default_str();
  on(sample, [&] { return cmd_sample(g, s_n, s_trials, s_workers); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Output o = action();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    emit(g, command, o, ms, out);
    return o.verification_failed ? kExitVerificationFailed : kExitOk;
  } catch (const UsageError& e) {
    err << "ssm " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "ssm " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoFit& e) {
    err << "ssm " << command << ": " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "ssm " << command << ": " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ssm::cli
