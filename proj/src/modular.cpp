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

#include "ssm/detail/modular.hpp"

#include <utility>

namespace ssm::detail {

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>>& rows,
                     std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = mod_inv(rows[rank][c]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const std::uint64_t f = mod_mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = mod_sub(rows[i][j], mod_mul(f, rows[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

void trim(std::vector<std::uint64_t>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = mod_inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mod_mul(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = mod_sub(a[shift + j], mod_mul(f, b[j]));
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace ssm::detail
