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

// Arithmetic modulo the Mersenne prime 2^61 - 1. Used only as a fast filter in
// front of exact computations: a modular answer never decides a result on its
// own, it only rules out work whose exact outcome is already implied.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssm/rational.hpp"

namespace ssm::detail {

inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kModulus - b;
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kModulus);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return mod_add(lo, hi);
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mod_mul(r, base);
    base = mod_mul(base, base);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kModulus - 2); }

inline std::uint64_t reduce(const BigInt& x) {
  return mpz_fdiv_ui(x.get_mpz_t(), kModulus);
}

// Empty when the denominator vanishes modulo the prime.
inline std::optional<std::uint64_t> reduce(const Rational& x) {
  const std::uint64_t d = reduce(x.den_ref());
  if (d == 0) return std::nullopt;
  return mod_mul(reduce(x.num_ref()), mod_inv(d));
}

// Rank of a dense matrix over GF(p). Destroys its argument.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>>& rows,
                     std::size_t cols);

// Degree of gcd(a, b) over GF(p), for ascending coefficient vectors already
// reduced and trimmed. Returns -1 when both are zero.
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b);

}  // namespace ssm::detail
