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

// Ground truth that does not go through the generating function: brute-force
// enumeration of all perfect matchings, and a seeded uniform sampler.
//
// Individuals are labeled 0..4n-1; 0..2n-1 are men and 2n..4n-1 are women.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ssm/rational.hpp"

namespace ssm {

// (4n-1)!! at n = 4 is 2,027,025; n = 5 would be ~6.5e8 and is refused
// unless explicitly allowed.
inline constexpr int kMaxEnumerationN = 4;
// Hard ceiling even with the override: the bitmask holds 4n <= 32 people.
inline constexpr int kEnumerationBitmaskLimitN = 8;

struct MatchingDistribution {
  int n = 0;
  std::map<int, BigInt> counts;  // every even j in 0..2n, zeros included
  BigInt total;
};

// Visits every perfect matching once by always pairing the lowest unmatched
// individual with each remaining candidate, counting same-sex pairs on the
// way down. Subtrees under individual 0's partner run in parallel and are
// summed in a fixed order.
//
// Throws DomainError when n < 1, or n > kMaxEnumerationN without
// allow_large, or n > kEnumerationBitmaskLimitN.
MatchingDistribution enumerate_matchings(int n, bool allow_large = false,
                                         int threads = 0);

inline constexpr const char* kSamplerGenerator =
    "mt19937_64 seeded by seed_seq(seed_lo32, seed_hi32, worker); "
    "bounded draws by multiply-shift rejection";

struct SampleSummary {
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string generator = kSamplerGenerator;
  std::map<int, std::int64_t> empirical_counts;  // only observed values
  std::vector<double> empirical_moments;         // m_1..m_4
};

// partner[i] for one uniformly random perfect matching of the 4n individuals,
// drawn by the same sequential rule the sampler uses.
std::vector<int> draw_matching(int n, std::mt19937_64& rng);

// Draws `trials` uniform perfect matchings: repeatedly take the first
// unmatched individual in pool order and pair it with a uniformly chosen
// other unmatched individual. Trials are split across `workers` streams with
// per-worker seeds, so output depends only on (n, trials, seed, workers).
// Throws DomainError when n < 1, trials < 1 or workers < 1.
SampleSummary sample_matchings(int n, std::int64_t trials, std::uint64_t seed,
                               int workers = 1);

}  // namespace ssm
