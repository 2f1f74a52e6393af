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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "d2cs/generators.hpp"
#include "d2cs/graph.hpp"

namespace d2cs {
namespace {

Graph p4() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}); }

std::vector<int> as_ints(const DistanceMap& d) {
  std::vector<int> out;
  for (Distance x : d.values()) out.push_back(x.is_infinite() ? -1 : x.value());
  return out;
}

// All-pairs distances by Floyd-Warshall on an adjacency matrix.
std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
  for (int u = 1; u <= n; ++u) {
    d[u][u] = 0;
    for (int v = 1; v <= n; ++v) {
      if (u != v && g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 2}, {2, 1}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 4}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 2}}), InputError);
}

TEST(GraphTest, EdgeCountIsHalfDegreeSum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(1 + trial % 12, 0.4, rng);
    int sum = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
    }
    EXPECT_EQ(sum, 2 * g.size());
  }
}

TEST(BfsDistances, Examples) {
  EXPECT_EQ(as_ints(bfs_distances(p4(), 1)), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(as_ints(bfs_distances(Graph::from_edges(3, {{1, 2}}), 1)), (std::vector<int>{0, 1, -1}));
  EXPECT_EQ(as_ints(bfs_distances(gen_complete(3), 2)), (std::vector<int>{1, 0, 1}));
  EXPECT_THROW(bfs_distances(p4(), 5), InputError);
  EXPECT_THROW(bfs_distances(p4(), 0), InputError);
}

TEST(BfsDistances, SymmetricAndMatchesFloyd) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(2 + trial % 10, 0.3, rng);
    const auto fw = floyd(g);
    for (Vertex u = 1; u <= g.order(); ++u) {
      const auto du = bfs_distances(g, u);
      for (Vertex v = 1; v <= g.order(); ++v) {
        EXPECT_EQ(du[v], bfs_distances(g, v)[u]);
        if (fw[u][v] >= (1 << 20)) {
          EXPECT_TRUE(du[v].is_infinite());
        } else {
          EXPECT_EQ(du[v].value(), fw[u][v]);
        }
      }
    }
  }
}

TEST(InducedSubgraph, Examples) {
  auto a = induced_subgraph(p4(), VertexSet(4, {1, 3}));
  EXPECT_EQ(a.graph.order(), 2);
  EXPECT_EQ(a.graph.size(), 0);
  auto b = induced_subgraph(p4(), VertexSet(4, {1, 2, 3}));
  EXPECT_EQ(b.graph, gen_path(3));
  EXPECT_EQ(b.original, (std::vector<Vertex>{1, 2, 3}));
  auto c = induced_subgraph(p4(), VertexSet(4));
  EXPECT_EQ(c.graph.order(), 0);
  EXPECT_THROW(induced_subgraph(p4(), VertexSet(6, {5})), InputError);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(p4()), Distance(3));
  EXPECT_TRUE(diameter(Graph::from_edges(3, {{1, 2}})).is_infinite());
  EXPECT_EQ(diameter(Graph(1)), Distance(0));
  EXPECT_EQ(diameter(Graph(0)), Distance(0));
}

TEST(GraphSquare, Examples) {
  const Graph sq = graph_square(p4());
  EXPECT_EQ(sq.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(graph_square(gen_complete(5)), gen_complete(5));
  EXPECT_EQ(graph_square(gen_star(3)), gen_complete(4));
}

TEST(GraphSquare, MatchesPairwiseDistancesAndContainsG) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(2 + trial % 11, 0.25, rng);
    const Graph sq = graph_square(g);
    const auto fw = floyd(g);
    for (Vertex u = 1; u <= g.order(); ++u) {
      for (Vertex v = 1; v <= g.order(); ++v) {
        EXPECT_EQ(sq.adjacent(u, v), u != v && fw[u][v] <= 2);
        if (g.adjacent(u, v)) {
          EXPECT_TRUE(sq.adjacent(u, v));
        }
      }
    }
  }
}

TEST(IsD2cs, Examples) {
  EXPECT_TRUE(is_d2cs(p4(), VertexSet(4, {1, 2, 3})));
  EXPECT_FALSE(is_d2cs(p4(), VertexSet(4, {1, 4})));
  EXPECT_FALSE(is_d2cs(p4(), VertexSet(4, {1, 2, 3, 4})));
  EXPECT_TRUE(is_d2cs(p4(), VertexSet(4)));
  EXPECT_TRUE(is_d2cs(p4(), VertexSet(4, {4})));
  EXPECT_THROW(is_d2cs(p4(), VertexSet(5, {5})), InputError);
}

// Subsets of a D2CS need not be D2CS.
TEST(IsD2cs, NotClosedUnderSubsets) {
  EXPECT_TRUE(is_d2cs(p4(), VertexSet(4, {1, 2, 3})));
  EXPECT_FALSE(is_d2cs(p4(), VertexSet(4, {1, 3})));
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(p4(), 2), VertexSet(4, {1, 2, 3}));
  EXPECT_EQ(closed_neighborhood(gen_complete(4), 1), VertexSet(4, {1, 2, 3, 4}));
  EXPECT_EQ(closed_neighborhood(Graph(3), 2), VertexSet(3, {2}));
  EXPECT_THROW(closed_neighborhood(p4(), 9), InputError);
}

TEST(ClosedNeighborhood, AlwaysD2cs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(1 + trial % 12, 0.35, rng);
    for (Vertex v = 1; v <= g.order(); ++v) EXPECT_TRUE(is_d2cs(g, closed_neighborhood(g, v)));
  }
}

TEST(VertexSetTest, CanonicalOrderIsLexicographic) {
  const VertexSet a(5, {1, 2, 3});
  const VertexSet b(5, {1, 2, 3, 4});
  const VertexSet c(5, {1, 2, 4});
  const VertexSet d(5, {2});
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(b, c));
  EXPECT_TRUE(canonical_less(c, d));
  EXPECT_FALSE(canonical_less(a, a));
  EXPECT_TRUE(canonical_less(VertexSet(5), d));
}

TEST(VertexSetTest, KeepAboveAndMaxAcrossWords) {
  VertexSet s(130, {1, 64, 65, 100, 130});
  EXPECT_EQ(s.max(), 130);
  s.keep_above(64);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{65, 100, 130}));
  s.keep_above(129);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{130}));
  EXPECT_EQ(VertexSet(10).max(), 0);
}

}  // namespace
}  // namespace d2cs
