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

// On-disk cache of exact moment tables.
//
// One file per (n_min, n_max, r_max), named moments-n<a>-<b>-r<r>.tsv. The
// first line is a header carrying the format and artifact versions; each
// further line holds n and the raw moments m_0..m_r as "p/q" text. Central
// and normalized moments are rebuilt from the raw ones on load. Files from
// another artifact version, or that fail to parse, are ignored and replaced.

#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "ssm/moments.hpp"

namespace ssm::cli {

inline constexpr int kCacheFormatVersion = 1;

// Holds an exclusive advisory lock on <dir>/.lock for its lifetime, so
// concurrent processes sharing a directory take turns.
class MomentCache {
 public:
  // Creates dir if needed. Throws std::runtime_error with the path on I/O
  // failure.
  explicit MomentCache(std::filesystem::path dir);
  ~MomentCache();
  MomentCache(const MomentCache&) = delete;
  MomentCache& operator=(const MomentCache&) = delete;

  // Tables for n_min..n_max of order >= r_max, from any valid file whose
  // range and order cover the request, truncated to exactly what was asked.
  std::optional<std::vector<MomentTable>> load(int n_min, int n_max, int r_max) const;

  // Writes atomically (temporary file, then rename).
  void store(const std::vector<MomentTable>& tables, int r_max) const;

  std::filesystem::path path_for(int n_min, int n_max, int r_max) const;

 private:
  std::filesystem::path dir_;
  int lock_fd_ = -1;
};

// Computes the tables, going through the cache when one is given.
std::vector<MomentTable> cached_moment_tables(MomentCache* cache, int n_min, int n_max,
                                              int r_max, int threads);

}  // namespace ssm::cli
