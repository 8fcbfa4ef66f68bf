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

#include "ssm/oracle.hpp"

#include <atomic>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

#include "ssm/errors.hpp"

namespace ssm {
namespace {

class Enumerator {
 public:
  Enumerator(int people, int men) : people_(people), men_(men) {}

  // counts[x] += number of completions of `used` with x further same-sex pairs
  // beyond `same` already formed.
  void run(std::uint32_t used, int same, std::vector<std::uint64_t>& counts) const {
    if (used == full()) {
      ++counts[static_cast<size_t>(same)];
      return;
    }
    const int first = std::countr_one(used);
    const bool first_is_man = first < men_;
    const std::uint32_t with_first = used | (1U << first);
    for (int j = first + 1; j < people_; ++j) {
      if (used & (1U << j)) continue;
      const int add = (first_is_man == (j < men_)) ? 1 : 0;
      run(with_first | (1U << j), same + add, counts);
    }
  }

  bool same_sex(int a, int b) const { return (a < men_) == (b < men_); }

 private:
  std::uint32_t full() const {
    return people_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << people_) - 1;
  }
  int people_;
  int men_;
};

// Unbiased integer in [0, range) (Lemire's multiply-shift with rejection).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  std::uint64_t x = rng();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      x = rng();
      m = static_cast<unsigned __int128>(x) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::mt19937_64 worker_engine(std::uint64_t seed, int worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  return std::mt19937_64(seq);
}

// Rearranges pool so that (pool[0], pool[1]), (pool[2], pool[3]), ... is a
// uniform random perfect matching: the first unmatched entry is paired with a
// uniformly chosen later one.
void pair_up(std::vector<int>& pool, std::mt19937_64& rng) {
  for (size_t head = 0; head + 1 < pool.size(); head += 2) {
    const auto remaining = static_cast<std::uint64_t>(pool.size() - head - 1);
    std::swap(pool[head + 1], pool[head + 1 + bounded(rng, remaining)]);
  }
}

// counts[x] for `trials` sampled matchings.
std::vector<std::int64_t> sample_stream(int n, std::int64_t trials,
                                        std::mt19937_64 rng) {
  const int men = 2 * n;
  std::vector<std::int64_t> counts(static_cast<size_t>(2 * n) + 1, 0);
  std::vector<int> pool(static_cast<size_t>(4 * n));
  for (std::int64_t t = 0; t < trials; ++t) {
    std::iota(pool.begin(), pool.end(), 0);
    pair_up(pool, rng);
    int same = 0;
    for (size_t i = 0; i < pool.size(); i += 2) {
      same += ((pool[i] < men) == (pool[i + 1] < men)) ? 1 : 0;
    }
    ++counts[static_cast<size_t>(same)];
  }
  return counts;
}

}  // namespace

MatchingDistribution enumerate_matchings(int n, bool allow_large, int threads) {
  if (n < 1) throw DomainError("enumerate_matchings needs n >= 1");
  if (n > kEnumerationBitmaskLimitN) {
    throw DomainError("enumerate_matchings supports n <= " +
                      std::to_string(kEnumerationBitmaskLimitN));
  }
  if (n > kMaxEnumerationN && !allow_large) {
    throw DomainError("enumerate_matchings refuses n = " + std::to_string(n) +
                      " (> " + std::to_string(kMaxEnumerationN) +
                      "); pass the explicit override to run it anyway");
  }
  const int people = 4 * n;
  const Enumerator e(people, 2 * n);
  const auto bins = static_cast<size_t>(2 * n) + 1;

  // One subtree per partner of individual 0.
  const int branches = people - 1;
  std::vector<std::vector<std::uint64_t>> partial(static_cast<size_t>(branches),
                                                  std::vector<std::uint64_t>(bins, 0));
  auto run_branch = [&](int b) {
    const int partner = b + 1;
    e.run(1U | (1U << partner), e.same_sex(0, partner) ? 1 : 0,
          partial[static_cast<size_t>(b)]);
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (threads == 1) {
    for (int b = 0; b < branches; ++b) run_branch(b);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < std::min(threads, branches); ++w) {
      pool.emplace_back([&] {
        for (int b; (b = next.fetch_add(1)) < branches;) run_branch(b);
      });
    }
  }

  MatchingDistribution out;
  out.n = n;
  out.total = 0;
  for (size_t x = 0; x < bins; ++x) {
    BigInt c = 0;
    for (const auto& p : partial) c += BigInt(static_cast<unsigned long>(p[x]));
    if (x % 2 == 0 || c != 0) out.counts[static_cast<int>(x)] = c;
    out.total += c;
  }
  return out;
}

std::vector<int> draw_matching(int n, std::mt19937_64& rng) {
  if (n < 1) throw DomainError("draw_matching needs n >= 1");
  std::vector<int> pool(static_cast<size_t>(4 * n));
  std::iota(pool.begin(), pool.end(), 0);
  pair_up(pool, rng);
  std::vector<int> partner(pool.size());
  for (size_t i = 0; i < pool.size(); i += 2) {
    partner[static_cast<size_t>(pool[i])] = pool[i + 1];
    partner[static_cast<size_t>(pool[i + 1])] = pool[i];
  }
  return partner;
}

SampleSummary sample_matchings(int n, std::int64_t trials, std::uint64_t seed,
                               int workers) {
  if (n < 1) throw DomainError("sample_matchings needs n >= 1");
  if (trials < 1) throw DomainError("sample_matchings needs trials >= 1");
  if (workers < 1) throw DomainError("sample_matchings needs workers >= 1");

  std::vector<std::vector<std::int64_t>> partial(static_cast<size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t share = trials / workers + (w < trials % workers ? 1 : 0);
      auto job = [&partial, n, share, seed, w] {
        partial[static_cast<size_t>(w)] = sample_stream(n, share, worker_engine(seed, w));
      };
      if (workers == 1) {
        job();
      } else {
        pool.emplace_back(job);
      }
    }
  }

  SampleSummary s;
  s.n = n;
  s.trials = trials;
  s.seed = seed;
  s.workers = workers;
  std::vector<std::int64_t> counts(static_cast<size_t>(2 * n) + 1, 0);
  for (const auto& p : partial) {
    for (size_t x = 0; x < counts.size(); ++x) counts[x] += p[x];
  }
  for (size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] != 0) s.empirical_counts[static_cast<int>(x)] = counts[x];
  }
  // Moments are formed exactly from the counts and rounded once.
  for (unsigned r = 1; r <= 4; ++r) {
    Rational acc;
    for (const auto& [x, c] : s.empirical_counts) {
      acc += Rational(static_cast<long>(x)).pow(r) * Rational(static_cast<long>(c));
    }
    s.empirical_moments.push_back((acc / Rational(static_cast<long>(trials))).to_double());
  }
  return s;
}

}  // namespace ssm
