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
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "d2cs/error.hpp"
#include "d2cs/graph.hpp"

namespace d2cs {

namespace detail {

/// Rooted ordered tree; node 0 is the root and children keep their order.
struct OrderedTree {
  std::vector<std::vector<int>> children{{}};

  int size() const { return static_cast<int>(children.size()); }

  /// Copies `sub` in and returns the id its root received.
  int graft(const OrderedTree& sub) {
    const int offset = size();
    for (const auto& kids : sub.children) {
      auto& dst = children.emplace_back();
      for (int c : kids) dst.push_back(c + offset);
    }
    return offset;
  }

  /// Breadth-first numbering from the root, children left to right.
  Graph to_graph() const {
    std::vector<Edge> edges;
    std::deque<std::pair<int, Vertex>> queue{{0, 1}};
    Vertex next = 2;
    while (!queue.empty()) {
      auto [node, id] = queue.front();
      queue.pop_front();
      for (int c : children[static_cast<std::size_t>(node)]) {
        edges.push_back({id, next});
        queue.emplace_back(c, next++);
      }
    }
    return Graph::from_edges(size(), edges);
  }
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline OrderedTree fibonacci_tree(int n) {
  if (n <= 1) return {};
  OrderedTree t = fibonacci_tree(n - 1);
  const int root = t.graft(fibonacci_tree(n - 2));
  t.children[0].insert(t.children[0].begin(), root);
  return t;
}

inline OrderedTree binary_fibonacci_tree(int n) {
  OrderedTree t;
  if (n == 0) return t;
  if (n == 1) {
    t.children.emplace_back();
    t.children[0].push_back(1);
    return t;
  }
  const int left = t.graft(binary_fibonacci_tree(n - 1));
  const int right = t.graft(binary_fibonacci_tree(n - 2));
  t.children[0] = {left, right};
  return t;
}

inline OrderedTree binomial_tree(int k) {
  if (k == 0) return {};
  OrderedTree t = binomial_tree(k - 1);
  const int root = t.graft(binomial_tree(k - 1));
  t.children[0].insert(t.children[0].begin(), root);
  return t;
}

/// AHU encoding of the tree rooted at `root`, children sorted.
inline std::string rooted_code(const Graph& g, Vertex root, Vertex parent) {
  std::vector<std::string> codes;
  for (Vertex c : g.neighbors(root)) {
    if (c != parent) codes.push_back(rooted_code(g, c, root));
  }
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (auto& c : codes) out += c;
  out += ')';
  return out;
}

inline std::vector<Vertex> tree_centers(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()) + 1);
  std::vector<Vertex> layer;
  for (Vertex v = 1; v <= g.order(); ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = g.order();
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

/// Isomorphism-invariant code of a free tree: the smaller center-rooted code.
inline std::string free_tree_code(const Graph& g) {
  std::string best;
  for (Vertex c : tree_centers(g)) {
    std::string code = rooted_code(g, c, 0);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline OrderedTree parse_code(std::string_view code) {
  OrderedTree t;
  t.children.clear();
  std::vector<int> stack;
  for (char ch : code) {
    if (ch == '(') {
      const int id = static_cast<int>(t.children.size());
      t.children.emplace_back();
      if (!stack.empty()) t.children[static_cast<std::size_t>(stack.back())].push_back(id);
      stack.push_back(id);
    } else {
      stack.pop_back();
    }
  }
  return t;
}

}  // namespace detail

inline Graph gen_complete_kary_tree(int k, int h) {
  detail::require(k >= 1 && h >= 0, "kary tree needs k >= 1 and h >= 0");
  std::vector<Edge> edges;
  std::vector<Vertex> level{1};
  Vertex next = 2;
  for (int d = 0; d < h; ++d) {
    std::vector<Vertex> below;
    for (Vertex p : level) {
      for (int j = 0; j < k; ++j) {
        edges.push_back({p, next});
        below.push_back(next++);
      }
    }
    level = std::move(below);
  }
  return Graph::from_edges(next - 1, edges);
}

/// Order n: the order n-1 tree with a fresh order n-2 tree hung from its root
/// as the new leftmost child.
inline Graph gen_fibonacci_tree(int n) {
  detail::require(n >= 0, "fibonacci tree order must be >= 0");
  return detail::fibonacci_tree(n).to_graph();
}

/// Order 0 is K_1, order 1 is P_2, order n joins a new root to an order n-1
/// (left) and an order n-2 (right) subtree.
inline Graph gen_binary_fibonacci_tree(int n) {
  detail::require(n >= 0, "binary fibonacci tree order must be >= 0");
  return detail::binary_fibonacci_tree(n).to_graph();
}

inline Graph gen_binomial_tree(int k) {
  detail::require(k >= 0 && k <= 24, "binomial tree order must be in 0..24");
  return detail::binomial_tree(k).to_graph();
}

/// Clique on 1..k; clique vertex i owns pendants k+(i-1)r+1 .. k+ir.
inline Graph gen_split_graph(int k, int r) {
  detail::require(k >= 1 && r >= 1, "split graph needs k >= 1 and r >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) edges.push_back({u, v});
  }
  Vertex next = k + 1;
  for (Vertex u = 1; u <= k; ++u) {
    for (int j = 0; j < r; ++j) edges.push_back({u, next++});
  }
  return Graph::from_edges(k * (r + 1), edges);
}

/// P_n x P_2: rails 1..n and n+1..2n, rung i joins i and n+i.
inline Graph gen_ladder(int n) {
  detail::require(n >= 1, "ladder needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({n + i, n + i + 1});
  }
  for (Vertex i = 1; i <= n; ++i) edges.push_back({i, n + i});
  return Graph::from_edges(2 * n, edges);
}

/// K_{1,n} with center 1.
inline Graph gen_star(int n) {
  detail::require(n >= 0, "star needs n >= 0");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n + 1; ++v) edges.push_back({1, v});
  return Graph::from_edges(n + 1, edges);
}

inline Graph gen_complete(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

inline Graph gen_empty(int n) {
  detail::require(n >= 1, "empty graph needs n >= 1");
  return Graph(n);
}

inline Graph gen_path(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

inline Graph gen_cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return Graph::from_edges(n, edges);
}

/// Path-like k-tree: K_{k+1} on 1..k+1, then vertex i joins i-k .. i-1.
inline Graph gen_ktree(int n, int k) {
  detail::require(k >= 1 && n >= k + 1, "ktree needs n >= k+1 >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= k + 1; ++u) {
    for (Vertex v = u + 1; v <= k + 1; ++v) edges.push_back({u, v});
  }
  for (Vertex i = k + 2; i <= n; ++i) {
    for (Vertex j = i - k; j < i; ++j) edges.push_back({j, i});
  }
  return Graph::from_edges(n, edges);
}

/// G(n, p) redrawn until connected. Each pair u < v (in lexicographic order)
/// consumes one 64-bit draw; its top 53 bits give a uniform in [0, 1).
inline Graph gen_random_connected(int n, double p, std::uint64_t seed) {
  detail::require(n >= 1, "random graph needs n >= 1");
  detail::require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  detail::require(n == 1 || p > 0.0, "p = 0 can never give a connected graph on n > 1 vertices");
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (x < p) edges.push_back({u, v});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
}

/// Every tree on n vertices up to isomorphism, sorted by canonical code.
/// Each is labeled breadth-first from a center.
inline std::vector<Graph> tree_catalog(int n) {
  detail::require(n >= 1 && n <= 16, "tree catalog supports 1..16 vertices");
  std::set<std::string> codes{"()"};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> grown;
    for (const auto& code : codes) {
      const Graph t = detail::parse_code(code).to_graph();
      auto edges = t.edges();
      for (Vertex v = 1; v <= t.order(); ++v) {
        edges.push_back({v, t.order() + 1});
        grown.insert(detail::free_tree_code(Graph::from_edges(t.order() + 1, edges)));
        edges.pop_back();
      }
    }
    codes = std::move(grown);
  }
  std::vector<Graph> out;
  for (const auto& code : codes) out.push_back(detail::parse_code(code).to_graph());
  return out;
}

enum class Family {
  kKaryTree,
  kFibonacciTree,
  kBinaryFibonacciTree,
  kBinomialTree,
  kSplit,
  kStar,
  kLadder,
  kComplete,
  kEmpty,
  kPath,
  kCycle,
  kKTree,
  kRandomConnected,
  kTree,
};

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::kKaryTree, "kary"},
    {Family::kFibonacciTree, "fibonacci"},
    {Family::kBinaryFibonacciTree, "binary-fibonacci"},
    {Family::kBinomialTree, "binomial"},
    {Family::kSplit, "split"},
    {Family::kStar, "star"},
    {Family::kLadder, "ladder"},
    {Family::kComplete, "complete"},
    {Family::kEmpty, "empty"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kKTree, "ktree"},
    {Family::kRandomConnected, "random"},
    {Family::kTree, "tree"},
};

inline std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  throw InternalError("unnamed family");
}

/// Accepts the short names above and the long forms "kary-tree",
/// "fibonacci-tree", "binary-fibonacci-tree", "binomial-tree".
inline Family parse_family(std::string_view name) {
  std::string_view key = name;
  if (key.ends_with("-tree") && key != "tree") key.remove_suffix(5);
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == key) return fam;
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

/// How many integer parameters a family takes (random takes n, then p).
inline std::size_t family_arity(Family f) {
  switch (f) {
    case Family::kKaryTree:
    case Family::kSplit:
    case Family::kKTree:
    case Family::kTree:
      return 2;
    default:
      return 1;
  }
}

struct FamilySpec {
  Family family = Family::kComplete;
  std::vector<long long> params;
  /// Edge probability; random family only.
  double probability = 0.0;
  /// Random family only.
  std::optional<std::uint64_t> seed;
};

inline Graph make_graph(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (p.size() != family_arity(spec.family)) {
    throw InputError(std::string(family_name(spec.family)) + " takes " +
                     std::to_string(family_arity(spec.family)) + " integer parameter(s), got " +
                     std::to_string(p.size()));
  }
  for (long long x : p) {
    detail::require(x >= -1'000'000 && x <= 1'000'000, "parameter out of range");
  }
  auto at = [&](std::size_t i) { return static_cast<int>(p[i]); };
  switch (spec.family) {
    case Family::kKaryTree:
      return gen_complete_kary_tree(at(0), at(1));
    case Family::kFibonacciTree:
      detail::require(at(0) <= 30, "fibonacci tree order must be <= 30");
      return gen_fibonacci_tree(at(0));
    case Family::kBinaryFibonacciTree:
      detail::require(at(0) <= 30, "binary fibonacci tree order must be <= 30");
      return gen_binary_fibonacci_tree(at(0));
    case Family::kBinomialTree:
      return gen_binomial_tree(at(0));
    case Family::kSplit:
      return gen_split_graph(at(0), at(1));
    case Family::kStar:
      return gen_star(at(0));
    case Family::kLadder:
      return gen_ladder(at(0));
    case Family::kComplete:
      return gen_complete(at(0));
    case Family::kEmpty:
      return gen_empty(at(0));
    case Family::kPath:
      return gen_path(at(0));
    case Family::kCycle:
      return gen_cycle(at(0));
    case Family::kKTree:
      return gen_ktree(at(0), at(1));
    case Family::kRandomConnected:
      return gen_random_connected(at(0), spec.probability, spec.seed.value_or(0));
    case Family::kTree: {
      auto catalog = tree_catalog(at(0));
      detail::require(at(1) >= 0 && at(1) < static_cast<int>(catalog.size()),
                      "tree index outside the catalog for n=" + std::to_string(at(0)));
      return std::move(catalog[static_cast<std::size_t>(at(1))]);
    }
  }
  throw InternalError("unhandled family");
}

}  // namespace d2cs
