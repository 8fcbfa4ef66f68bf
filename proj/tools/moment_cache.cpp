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

#include "moment_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ssm/version.hpp"

namespace ssm::cli {
namespace {

namespace fs = std::filesystem;

std::string header_line(int n_min, int n_max, int r_max) {
  std::ostringstream os;
  os << "ssm-moment-cache\tformat=" << kCacheFormatVersion << "\tartifact=" << kArtifactVersion
     << "\tn_min=" << n_min << "\tn_max=" << n_max << "\tr_max=" << r_max;
  return os.str();
}

MomentTable table_from_raw(int n, std::vector<Rational> raw) {
  MomentTable t;
  t.n = n;
  t.r_max = static_cast<int>(raw.size()) - 1;
  t.central = central_moments(raw);
  t.normalized = normalized_moments(t.central);
  t.raw = std::move(raw);
  return t;
}

// Parses a whole cache file; nullopt on any mismatch.
std::optional<std::vector<MomentTable>> read_file(const fs::path& path, int n_min, int n_max,
                                                  int r_max) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != header_line(n_min, n_max, r_max)) return std::nullopt;
  std::vector<MomentTable> out;
  try {
    for (int n = n_min; n <= n_max; ++n) {
      if (!std::getline(in, line)) return std::nullopt;
      std::istringstream row(line);
      std::string field;
      if (!std::getline(row, field, '\t') || field != std::to_string(n)) return std::nullopt;
      std::vector<Rational> raw;
      while (std::getline(row, field, '\t')) raw.push_back(Rational::parse(field));
      if (static_cast<int>(raw.size()) != r_max + 1 || raw[0] != Rational(1)) {
        return std::nullopt;
      }
      out.push_back(table_from_raw(n, std::move(raw)));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (std::getline(in, line) && !line.empty()) return std::nullopt;
  return out;
}

std::runtime_error io_error(const std::string& what, const fs::path& path) {
  return std::runtime_error(what + " '" + path.string() + "': " + std::strerror(errno));
}

}  // namespace

MomentCache::MomentCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    throw std::runtime_error("cannot create cache directory '" + dir_.string() +
                             "': " + ec.message());
  }
  const fs::path lock = dir_ / ".lock";
  lock_fd_ = ::open(lock.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (lock_fd_ < 0) throw io_error("cannot open cache lock", lock);
  if (::flock(lock_fd_, LOCK_EX) != 0) {
    ::close(lock_fd_);
    throw io_error("cannot lock cache", lock);
  }
}

MomentCache::~MomentCache() {
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

fs::path MomentCache::path_for(int n_min, int n_max, int r_max) const {
  return dir_ / ("moments-n" + std::to_string(n_min) + "-" + std::to_string(n_max) + "-r" +
                 std::to_string(r_max) + ".tsv");
}

std::optional<std::vector<MomentTable>> MomentCache::load(int n_min, int n_max,
                                                          int r_max) const {
  static const std::regex name(R"(moments-n(\d+)-(\d+)-r(\d+)\.tsv)");
  struct Candidate {
    int a, b, r;
    fs::path path;
  };
  std::vector<Candidate> found;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    std::smatch m;
    const std::string file = entry.path().filename().string();
    if (!std::regex_match(file, m, name)) continue;
    Candidate c{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), entry.path()};
    if (c.a <= n_min && c.b >= n_max && c.r >= r_max) found.push_back(std::move(c));
  }
  // Smallest covering file first, so the choice does not depend on
  // directory order.
  std::sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
    return std::tuple(x.b - x.a, x.r, x.a) < std::tuple(y.b - y.a, y.r, y.a);
  });
  for (const auto& c : found) {
    auto tables = read_file(c.path, c.a, c.b, c.r);
    if (!tables) continue;
    std::vector<MomentTable> out;
    for (auto& t : *tables) {
      if (t.n < n_min || t.n > n_max) continue;
      if (t.r_max == r_max) {
        out.push_back(std::move(t));
      } else {
        t.raw.resize(static_cast<size_t>(r_max) + 1);
        out.push_back(table_from_raw(t.n, std::move(t.raw)));
      }
    }
    return out;
  }
  return std::nullopt;
}

void MomentCache::store(const std::vector<MomentTable>& tables, int r_max) const {
  if (tables.empty()) return;
  const int n_min = tables.front().n;
  const int n_max = tables.back().n;
  const fs::path target = path_for(n_min, n_max, r_max);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw io_error("cannot write cache file", tmp);
    out << header_line(n_min, n_max, r_max) << '\n';
    for (const auto& t : tables) {
      out << t.n;
      for (int r = 0; r <= r_max; ++r) out << '\t' << t.raw[static_cast<size_t>(r)].fraction_str();
      out << '\n';
    }
    out.flush();
    if (!out) throw io_error("cannot write cache file", tmp);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    throw std::runtime_error("cannot move cache file into place '" + target.string() +
                             "': " + ec.message());
  }
}

std::vector<MomentTable> cached_moment_tables(MomentCache* cache, int n_min, int n_max,
                                              int r_max, int threads) {
  if (cache) {
    if (auto hit = cache->load(n_min, n_max, r_max)) return std::move(*hit);
  }
  auto tables = moment_table_range(n_min, n_max, r_max, threads);
  if (cache) cache->store(tables, r_max);
  return tables;
}

}  // namespace ssm::cli
