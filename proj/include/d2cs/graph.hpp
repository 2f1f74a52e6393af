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
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "d2cs/error.hpp"
#include "d2cs/vertex_set.hpp"

namespace d2cs {

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n with bit-set adjacency.
///
/// Immutable once built. Construction rejects self-loops, repeated edges
/// and out-of-range endpoints instead of repairing them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0)), VertexSet(n)) {
    if (n < 0) throw InputError("negative vertex count");
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
        throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " has an endpoint outside 1.." + std::to_string(n));
      }
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      if (g.adj_[e.u - 1].contains(e.v)) {
        throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      }
      g.adj_[e.u - 1].insert(e.v);
      g.adj_[e.v - 1].insert(e.u);
      ++g.m_;
    }
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return m_; }

  bool has_vertex(Vertex v) const noexcept { return v >= 1 && v <= order(); }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
  }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 1; u <= order(); ++u) {
      for (Vertex v : adj_[u - 1]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (!has_vertex(v)) {
      throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order()));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  int m_ = 0;
};

/// Shortest-path length, or infinite across components.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int d) : d_(d) {}
  static constexpr Distance infinite() { return Distance(kInf); }

  constexpr bool is_infinite() const noexcept { return d_ == kInf; }
  constexpr int value() const noexcept { return d_; }

  friend constexpr auto operator<=>(Distance, Distance) = default;

  friend std::ostream& operator<<(std::ostream& os, Distance d) {
    if (d.is_infinite()) return os << "INFINITE";
    return os << d.d_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int d_ = 0;
};

/// BFS result indexed by 1-based vertex id.
class DistanceMap {
 public:
  explicit DistanceMap(int n) : d_(static_cast<std::size_t>(n), Distance::infinite()) {}

  Distance operator[](Vertex v) const { return d_.at(static_cast<std::size_t>(v - 1)); }
  Distance& operator[](Vertex v) { return d_.at(static_cast<std::size_t>(v - 1)); }
  int size() const noexcept { return static_cast<int>(d_.size()); }
  std::span<const Distance> values() const noexcept { return d_; }

 private:
  std::vector<Distance> d_;
};

inline DistanceMap bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  DistanceMap dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w].is_infinite()) {
        dist[w] = Distance(dist[u].value() + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

struct InducedSubgraph {
  Graph graph;
  /// original[i - 1] is the id in the parent graph of subgraph vertex i.
  std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  InducedSubgraph out;
  out.original = s.to_vector();
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    relabel[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i + 1);
  }
  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u) & s) {
      if (u < v) edges.push_back({relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]});
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(out.original.size()), edges);
  return out;
}

/// Maximum pairwise distance. Graphs with at most one vertex have diameter 0.
inline Distance diameter(const Graph& g) {
  Distance best(0);
  for (Vertex s = 1; s <= g.order(); ++s) {
    const DistanceMap dist = bfs_distances(g, s);
    for (Distance d : dist.values()) {
      if (d.is_infinite()) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return best;
}

/// G^2: u ~ v iff 1 <= d(u, v) <= 2, built from depth-2 neighborhood unions.
inline Graph graph_square(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= g.order(); ++u) {
    VertexSet reach = g.neighbors(u);
    for (Vertex w : g.neighbors(u)) reach |= g.neighbors(w);
    for (Vertex v : reach) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(g.order(), edges);
}

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

/// diam(G[S]) <= 2, evaluated on the explicitly built induced subgraph.
inline bool is_d2cs(const Graph& g, const VertexSet& s) {
  const Distance d = diameter(induced_subgraph(g, s).graph);
  return !d.is_infinite() && d.value() <= 2;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen(g.order());
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    const DistanceMap d = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (!d[v].is_infinite()) comp.insert(v);
    }
    seen |= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace d2cs
