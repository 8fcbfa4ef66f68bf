# Copyright 2026 The ssm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http:#www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact moments and asymptotic normality of same-sex marriage counts.

Exact quantities are returned as fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import ArithmeticError, DomainError, NoFit, __version__

__all__ = [
    "ArithmeticError",
    "DomainError",
    "NoFit",
    "__version__",
    "asymptotic",
    "enumerate_matchings",
    "fit",
    "mean",
    "moment_table",
    "normal_moment",
    "pgf",
    "sample",
    "variance",
    "verify",
]


def _q(text):
    return Fraction(text)


def _qs(texts):
    return [Fraction(t) for t in texts]


def _function(d):
    return {
        "text": d["text"],
        "numerator": _qs(d["numerator"]),
        "denominator": _qs(d["denominator"]),
    }


def _series(d):
    return {
        "leading_exponent": d["leading_exponent"],
        "coefficients": _qs(d["coefficients"]),
        "text": d["text"],
    }


def pgf(n):
    """Probabilities P(X = j), j = 0..2n, for 2n men and 2n women."""
    d = _core.pgf(n)
    return {
        "n": d["n"],
        "total_matchings": int(d["total_matchings"]),
        "probabilities": _qs(d["probabilities"]),
    }


def mean(n):
    return _q(_core.mean(n))


def variance(n):
    return _q(_core.variance(n))


def normal_moment(r):
    return _q(_core.normal_moment(r))


def moment_table(n, r_max):
    """Raw and central moments up to r_max, and alpha_r (alpha_r^2 for odd r)."""
    d = _core.moment_table(n, r_max)
    return {
        "n": d["n"],
        "raw": _qs(d["raw"]),
        "central": _qs(d["central"]),
        "alpha": {r: _q(v) for r, v in d["alpha"].items()},
    }


def fit(points, max_total_degree=-1, verification_points=10):
    """Rational function of n through (n, value) pairs; -1 picks the degree budget."""
    pairs = [(int(n), str(Fraction(v))) for n, v in points]
    d = _core.fit(pairs, max_total_degree, verification_points)
    out = _function(d)
    for key in ("numerator_degree", "denominator_degree", "points_used", "verified_on"):
        out[key] = d[key]
    return out


def asymptotic(numerator, denominator, order):
    """Expansion in descending powers of n of numerator(n)/denominator(n)."""
    d = _core.asymptotic(
        [str(Fraction(c)) for c in numerator],
        [str(Fraction(c)) for c in denominator],
        order,
    )
    out = _series(d)
    out["limit_kind"] = d["limit_kind"]
    out["limit"] = _q(d["limit"])
    return out


def verify(n_max=60, r_max=14, order=9, threads=0):
    d = _core.verify(n_max, r_max, order, threads)
    moments = []
    for m in d["moments"]:
        moments.append({
            "r": m["r"],
            "passed": m["passed"],
            "expected_limit": _q(m["expected_limit"]),
            "limit": None if m["limit"] is None else _q(m["limit"]),
            "function": None if m["function"] is None else _function(m["function"]),
            "series": None if m["series"] is None else _series(m["series"]),
            "diagnostics": m["diagnostics"],
        })
    return {"n_max": d["n_max"], "r_max": d["r_max"], "passed": d["passed"],
            "moments": moments}


def enumerate_matchings(n, allow_large=False):
    return _core.enumerate(n, allow_large)


def sample(n, trials, seed, workers=1):
    return _core.sample(n, trials, seed, workers)
