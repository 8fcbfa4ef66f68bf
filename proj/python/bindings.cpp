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

// Python bindings. Exact values cross the boundary as "p/q" strings; the
// package wrapper turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssm/asymptotics.hpp"
#include "ssm/errors.hpp"
#include "ssm/guesser.hpp"
#include "ssm/marriage.hpp"
#include "ssm/moments.hpp"
#include "ssm/normality.hpp"
#include "ssm/oracle.hpp"
#include "ssm/version.hpp"

namespace py = pybind11;

namespace {

using StrList = std::vector<std::string>;

StrList strings(std::span<const ssm::Rational> values) {
  StrList out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.fraction_str());
  return out;
}

ssm::Polynomial polynomial(const StrList& coefficients) {
  std::vector<ssm::Rational> cs;
  for (const auto& c : coefficients) cs.push_back(ssm::Rational::parse(c));
  return ssm::Polynomial(std::move(cs));
}

py::dict function_dict(const ssm::RationalFunction& f) {
  py::dict d;
  d["text"] = f.str("n");
  d["numerator"] = strings(f.numerator().coefficients());
  d["denominator"] = strings(f.denominator().coefficients());
  return d;
}

py::dict series_dict(const ssm::AsymptoticSeries& s) {
  py::dict d;
  d["leading_exponent"] = s.leading_exponent;
  d["coefficients"] = strings(s.coefficients);
  d["text"] = s.str("n", true);
  return d;
}

py::dict pgf(int n) {
  const auto d = ssm::build_pgf(n);
  py::dict out;
  out["n"] = n;
  out["total_matchings"] = d.total_matchings().get_str();
  out["probabilities"] = strings(d.probabilities());
  return out;
}

py::dict moment_table(int n, int r_max) {
  const auto t = ssm::moment_table(n, r_max);
  py::dict out;
  out["n"] = n;
  out["raw"] = strings(t.raw);
  out["central"] = strings(t.central);
  py::dict alpha;
  for (int r = 3; r <= r_max; ++r) alpha[py::int_(r)] = t.alpha_or_square(r).fraction_str();
  out["alpha"] = alpha;
  return out;
}

py::dict fit(const std::vector<std::pair<long, std::string>>& points, int max_total_degree,
             int verification_points) {
  ssm::FitRequest req;
  req.max_total_degree = max_total_degree;
  req.verification_points = verification_points;
  for (const auto& [n, v] : points) req.points.push_back({n, ssm::Rational::parse(v)});
  const auto r = ssm::fit_rational(req);
  py::dict out = function_dict(r.function);
  out["numerator_degree"] = r.numerator_degree;
  out["denominator_degree"] = r.denominator_degree;
  out["points_used"] = r.points_used;
  out["verified_on"] = r.verified_on;
  return out;
}

py::dict asymptotic(const StrList& numerator, const StrList& denominator, int order) {
  const ssm::RationalFunction f(polynomial(numerator), polynomial(denominator));
  const auto s = ssm::expand_asymptotic(f, order);
  py::dict out = series_dict(s);
  const auto lim = ssm::series_limit(s);
  out["limit_kind"] = ssm::to_string(lim.kind);
  out["limit"] = lim.value.fraction_str();
  return out;
}

py::dict verify(int n_max, int r_max, int order, int threads) {
  ssm::NormalityOptions opts;
  opts.threads = threads;
  ssm::NormalityReport rep;
  {
    py::gil_scoped_release release;
    rep = ssm::verify_normality(n_max, r_max, order, opts);
  }
  py::list moments;
  for (const auto& v : rep.per_moment) {
    py::dict m;
    m["r"] = v.r;
    m["passed"] = v.pass;
    m["expected_limit"] = v.expected_limit.fraction_str();
    m["limit"] = v.limit ? py::object(py::str(v.limit->value.fraction_str())) : py::none();
    m["function"] = v.fitted_function ? py::object(function_dict(*v.fitted_function)) : py::none();
    m["series"] = v.series ? py::object(series_dict(*v.series)) : py::none();
    m["diagnostics"] = v.diagnostics;
    moments.append(m);
  }
  py::dict out;
  out["n_max"] = rep.n_max;
  out["r_max"] = rep.r_max;
  out["passed"] = rep.overall;
  out["moments"] = moments;
  return out;
}

py::dict enumerate(int n, bool allow_large) {
  ssm::MatchingDistribution d;
  {
    py::gil_scoped_release release;
    d = ssm::enumerate_matchings(n, allow_large);
  }
  py::dict counts;
  for (const auto& [j, c] : d.counts) counts[py::int_(j)] = py::int_(py::str(c.get_str()));
  py::dict out;
  out["total"] = py::int_(py::str(d.total.get_str()));
  out["counts"] = counts;
  return out;
}

py::dict sample(int n, std::int64_t trials, std::uint64_t seed, int workers) {
  ssm::SampleSummary s;
  {
    py::gil_scoped_release release;
    s = ssm::sample_matchings(n, trials, seed, workers);
  }
  py::dict out;
  out["counts"] = s.empirical_counts;
  out["moments"] = s.empirical_moments;
  out["generator"] = s.generator;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact moments and asymptotic normality of same-sex marriage counts";
  m.attr("__version__") = ssm::kArtifactVersion;

  py::register_exception<ssm::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ssm::ArithmeticError>(m, "ArithmeticError", PyExc_ArithmeticError);
  py::register_exception<ssm::NoFit>(m, "NoFit", PyExc_RuntimeError);

  m.def("pgf", &pgf, py::arg("n"));
  m.def("mean", [](int n) { return ssm::mean_formula(n).fraction_str(); }, py::arg("n"));
  m.def("variance", [](int n) { return ssm::variance_formula(n).fraction_str(); },
        py::arg("n"));
  m.def("moment_table", &moment_table, py::arg("n"), py::arg("r_max"));
  m.def("fit", &fit, py::arg("points"), py::arg("max_total_degree") = ssm::kAutoDegree,
        py::arg("verification_points") = ssm::kDefaultVerificationPoints);
  m.def("asymptotic", &asymptotic, py::arg("numerator"), py::arg("denominator"),
        py::arg("order"));
  m.def("verify", &verify, py::arg("n_max") = ssm::kDefaultVerifyNMax,
        py::arg("r_max") = ssm::kDefaultMaxMomentOrder,
        py::arg("order") = ssm::kDefaultSeriesOrder, py::arg("threads") = 0);
  m.def("enumerate", &enumerate, py::arg("n"), py::arg("allow_large") = false);
  m.def("sample", &sample, py::arg("n"), py::arg("trials"), py::arg("seed"),
        py::arg("workers") = 1);
  m.def("normal_moment", [](int r) { return ssm::normal_moment(r).fraction_str(); },
        py::arg("r"));
}
