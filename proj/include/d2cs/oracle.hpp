/*
 * Copyright 2026 The d2cs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "d2cs/big_count.hpp"
#include "d2cs/error.hpp"
#include "d2cs/graph.hpp"

// Exhaustive reference counter: every subset of V(G) is tested directly
// against the definition. Slow by construction; everything else in the
// library is checked against it.

namespace d2cs {

inline constexpr int kDefaultOracleLimit = 24;
/// Subsets are 64-bit masks, so no limit may exceed this.
inline constexpr int kOracleHardCap = 62;

/// D2CS_ORACLE_LIMIT if set and valid, otherwise 24.
inline int default_oracle_limit() {
  if (const char* env = std::getenv("D2CS_ORACLE_LIMIT"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 0 && v <= kOracleHardCap) return static_cast<int>(v);
    throw InputError(std::string("D2CS_ORACLE_LIMIT must be an integer in 0..") +
                     std::to_string(kOracleHardCap) + ", got '" + env + "'");
  }
  return kDefaultOracleLimit;
}

struct OracleOptions {
  int limit = default_oracle_limit();
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Reject subsets that are not cliques of G^2 before the diameter test.
  /// Sound (a D2CS is always a square clique); off means every subset gets
  /// the full test.
  bool square_prefilter = false;
};

struct OracleResult {
  BigCount total;
  /// by_size[s] counts the D2CS with exactly s vertices, s = 0..n.
  std::vector<BigCount> by_size;
  /// Present when collection was requested; ascending bit-mask order
  /// (bit i stands for vertex i+1).
  std::optional<std::vector<VertexSet>> sets;
};

namespace detail {

struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<std::uint64_t> square;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(n)), square(adj.size()) {
    for (Vertex v = 1; v <= n; ++v) adj[static_cast<std::size_t>(v - 1)] = g.neighbors(v).mask();
    for (std::size_t u = 0; u < adj.size(); ++u) {
      std::uint64_t reach = adj[u];
      for (std::uint64_t x = adj[u]; x != 0; x &= x - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(x))];
      square[u] = reach & ~(std::uint64_t{1} << u);
    }
  }

  /// Every member reaches every other within two steps inside S.
  bool is_d2cs(std::uint64_t s) const {
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const std::uint64_t near = adj[static_cast<std::size_t>(u)] & s;
      std::uint64_t reach = near | (std::uint64_t{1} << u);
      for (std::uint64_t x = near; x != 0 && reach != s; x &= x - 1) {
        reach |= adj[static_cast<std::size_t>(std::countr_zero(x))] & s;
      }
      if ((reach & s) != s) return false;
    }
    return true;
  }

  bool is_square_clique(std::uint64_t s) const {
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const std::uint64_t others = s & ~(std::uint64_t{1} << u);
      if ((square[static_cast<std::size_t>(u)] & others) != others) return false;
    }
    return true;
  }
};

inline void check_limit(const Graph& g, const OracleOptions& opt) {
  const int limit = std::min(opt.limit, kOracleHardCap);
  if (g.order() > limit) throw OracleLimitError(g.order(), limit);
}

inline unsigned worker_count(const OracleOptions& opt, std::uint64_t work) {
  unsigned t = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
  if (work < (std::uint64_t{1} << 12)) t = 1;
  return t;
}

/// Calls visit(mask) for every D2CS mask. Workers get contiguous mask
/// ranges; per-worker results are merged in range order by the callers.
template <class PerWorker>
void for_each_worker_range(std::uint64_t total, unsigned workers, PerWorker&& body) {
  if (workers <= 1) {
    body(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(total, chunk * w);
    const std::uint64_t hi = std::min(total, lo + chunk);
    pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
  }
}

}  // namespace detail

inline OracleResult oracle_count(const Graph& g, bool collect, const OracleOptions& opt = {}) {
  detail::check_limit(g, opt);
  const detail::MaskGraph mg(g);
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned workers = detail::worker_count(opt, total);

  std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<std::vector<std::uint64_t>> masks(workers);
  detail::for_each_worker_range(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    auto& count = counts[w];
    auto& found = masks[w];
    for (std::uint64_t s = lo; s < hi; ++s) {
      if (opt.square_prefilter && !mg.is_square_clique(s)) continue;
      if (!mg.is_d2cs(s)) continue;
      ++count[static_cast<std::size_t>(std::popcount(s))];
      if (collect) found.push_back(s);
    }
  });

  OracleResult out;
  out.by_size.assign(static_cast<std::size_t>(n) + 1, BigCount{});
  for (const auto& c : counts) {
    for (std::size_t i = 0; i < c.size(); ++i) out.by_size[i] += BigCount(c[i]);
  }
  for (const auto& c : out.by_size) out.total += c;
  if (collect) {
    std::vector<VertexSet> sets;
    for (const auto& part : masks) {
      for (std::uint64_t s : part) sets.push_back(VertexSet::from_mask(n, s));
    }
    out.sets = std::move(sets);
  }
  return out;
}

/// Inclusion-maximal D2CS, canonically sorted. Maximality is decided against
/// the full table of D2CS: a superset-closure pass marks every mask that has
/// a D2CS superset, so no assumption about one-vertex extensions is made.
inline std::vector<VertexSet> oracle_maximal(const Graph& g, const OracleOptions& opt = {}) {
  detail::check_limit(g, opt);
  const detail::MaskGraph mg(g);
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  // bit 0: mask is a D2CS; bit 1: mask or some superset is a D2CS.
  std::vector<std::uint8_t> table(static_cast<std::size_t>(total), 0);
  const unsigned workers = detail::worker_count(opt, total);
  detail::for_each_worker_range(total, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t s = lo; s < hi; ++s) {
      if (opt.square_prefilter && !mg.is_square_clique(s)) continue;
      if (mg.is_d2cs(s)) table[static_cast<std::size_t>(s)] = 3;
    }
  });
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t s = 0; s < total; ++s) {
      if ((s & bit) == 0 && (table[static_cast<std::size_t>(s | bit)] & 2) != 0) table[static_cast<std::size_t>(s)] |= 2;
    }
  }
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < total; ++s) {
    if ((table[static_cast<std::size_t>(s)] & 1) == 0) continue;
    bool maximal = true;
    for (std::uint64_t missing = ~s & (total - 1); missing != 0 && maximal; missing &= missing - 1) {
      const std::uint64_t t = s | (missing & -missing);
      maximal = (table[static_cast<std::size_t>(t)] & 2) == 0;
    }
    if (maximal) out.push_back(VertexSet::from_mask(n, s));
  }
  canonicalize(out);
  return out;
}

/// A largest D2CS; among equal sizes the canonically smallest.
inline VertexSet oracle_maximum(const Graph& g, const OracleOptions& opt = {}) {
  detail::check_limit(g, opt);
  const detail::MaskGraph mg(g);
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::optional<VertexSet> best;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (best && std::popcount(s) < best->size()) continue;
    if (!mg.is_d2cs(s)) continue;
    VertexSet cand = VertexSet::from_mask(n, s);
    if (!best || cand.size() > best->size() || canonical_less(cand, *best)) best = std::move(cand);
  }
  return best.value_or(VertexSet(n));
}

}  // namespace d2cs
