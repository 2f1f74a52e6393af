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
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "d2cs/big_count.hpp"
#include "d2cs/error.hpp"
#include "d2cs/graph.hpp"

namespace d2cs {

/// A vertex order v_1..v_n: position i holds the i-th eliminated vertex.
class EliminationOrdering {
 public:
  EliminationOrdering() = default;
  explicit EliminationOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
    const int n = size();
    position_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
      const Vertex v = order_[static_cast<std::size_t>(i - 1)];
      if (v < 1 || v > n) {
        throw InputError("ordering entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (position_[static_cast<std::size_t>(v)] != 0) {
        throw InputError("ordering repeats vertex " + std::to_string(v));
      }
      position_[static_cast<std::size_t>(v)] = i;
    }
  }

  static EliminationOrdering identity(int n) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    return EliminationOrdering(std::move(order));
  }

  int size() const noexcept { return static_cast<int>(order_.size()); }
  Vertex vertex_at(int position) const { return order_.at(static_cast<std::size_t>(position - 1)); }
  int position_of(Vertex v) const { return position_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& order() const noexcept { return order_; }

  friend bool operator==(const EliminationOrdering& a, const EliminationOrdering& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

enum class SeoViolationKind { kNotSimplicial, kStrongCondition };

/// First failure found while scanning (i, j, k) lexicographically, as
/// positions in the ordering with i < j < k and v_j, v_k in N_i[v_i].
/// kNotSimplicial: v_j and v_k are not adjacent, so v_i is not simplicial
/// in G_i. kStrongCondition: `offender` is in N_i[v_j] but not N_i[v_k].
struct SeoViolation {
  SeoViolationKind kind;
  int i;
  int j;
  int k;
  Vertex vi;
  Vertex vj;
  Vertex vk;
  Vertex offender;

  std::string describe() const {
    std::ostringstream os;
    if (kind == SeoViolationKind::kNotSimplicial) {
      os << "NOT_SIMPLICIAL i=" << i << " (vertex " << vi << "): neighbors " << vj << " (j=" << j << ") and "
         << vk << " (k=" << k << ") are not adjacent";
    } else {
      os << "STRONG_CONDITION i=" << i << " j=" << j << " k=" << k << " (vertices " << vi << ", " << vj << ", "
         << vk << "): " << offender << " is in N_i[" << vj << "] but not N_i[" << vk << "]";
    }
    return os.str();
  }
};

namespace detail {

inline void check_ordering(const Graph& g, const EliminationOrdering& ord) {
  if (ord.size() != g.order()) {
    throw InputError("ordering has " + std::to_string(ord.size()) + " entries for a graph on " +
                     std::to_string(g.order()) + " vertices");
  }
}

/// N[v] restricted to `alive`.
inline VertexSet closed_in(const Graph& g, const VertexSet& alive, Vertex v) {
  VertexSet s = g.neighbors(v) & alive;
  s.insert(v);
  return s;
}

}  // namespace detail

/// Empty when `ord` is a strong elimination ordering of g: every v_i is
/// simplicial in G_i = G[v_i..v_n], and for i < j < k with v_j, v_k in
/// N_i[v_i], N_i[v_j] is contained in N_i[v_k].
inline std::optional<SeoViolation> verify_seo(const Graph& g, const EliminationOrdering& ord) {
  detail::check_ordering(g, ord);
  const int n = g.order();
  VertexSet alive = VertexSet::full(n);
  for (int i = 1; i <= n; ++i) {
    const Vertex vi = ord.vertex_at(i);
    std::vector<int> later;
    for (Vertex w : g.neighbors(vi) & alive) later.push_back(ord.position_of(w));
    std::sort(later.begin(), later.end());
    for (std::size_t a = 0; a < later.size(); ++a) {
      const Vertex vj = ord.vertex_at(later[a]);
      const VertexSet nj = detail::closed_in(g, alive, vj);
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        const Vertex vk = ord.vertex_at(later[b]);
        if (!g.adjacent(vj, vk)) {
          return SeoViolation{SeoViolationKind::kNotSimplicial, i, later[a], later[b], vi, vj, vk, vk};
        }
        const VertexSet excess = nj - detail::closed_in(g, alive, vk);
        if (!excess.empty()) {
          Vertex offender = *excess.begin();
          for (Vertex x : excess) {
            if (ord.position_of(x) < ord.position_of(offender)) offender = x;
          }
          return SeoViolation{SeoViolationKind::kStrongCondition, i, later[a], later[b], vi, vj, vk, offender};
        }
      }
    }
    alive.erase(vi);
  }
  return std::nullopt;
}

namespace detail {

/// v is simple in G[alive]: the closed neighborhoods of N[v] form a chain.
inline bool is_simple(const Graph& g, const VertexSet& alive, Vertex v) {
  std::vector<VertexSet> hoods;
  for (Vertex w : closed_in(g, alive, v)) hoods.push_back(closed_in(g, alive, w));
  std::sort(hoods.begin(), hoods.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  for (std::size_t i = 1; i < hoods.size(); ++i) {
    if (!hoods[i - 1].is_subset_of(hoods[i])) return false;
  }
  return true;
}

/// Search state for building a strong ordering: `before[b]` holds vertices
/// that must be eliminated before b (a precedes b whenever, at the time a
/// common earlier neighbor was eliminated, N[a] was strictly inside N[b]).
struct SeoSearch {
  const Graph& g;
  VertexSet alive;
  std::vector<VertexSet> before;
  std::vector<Vertex> order;

  explicit SeoSearch(const Graph& graph)
      : g(graph),
        alive(VertexSet::full(graph.order())),
        before(static_cast<std::size_t>(graph.order()) + 1, VertexSet(graph.order())) {}

  bool eligible(Vertex v) const {
    return !before[static_cast<std::size_t>(v)].intersects(alive) && is_simple(g, alive, v);
  }

  bool run() {
    if (alive.empty()) return true;
    std::vector<Vertex> cands;
    for (Vertex v : alive) {
      if (eligible(v)) cands.push_back(v);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      return (g.neighbors(a) & alive).size() < (g.neighbors(b) & alive).size();
    });
    for (Vertex v : cands) {
      const auto saved = before;
      const VertexSet nbrs = g.neighbors(v) & alive;
      for (Vertex a : nbrs) {
        const VertexSet na = closed_in(g, alive, a);
        for (Vertex b : nbrs) {
          if (a != b && na.is_proper_subset_of(closed_in(g, alive, b))) {
            before[static_cast<std::size_t>(b)].insert(a);
          }
        }
      }
      alive.erase(v);
      order.push_back(v);
      if (run()) return true;
      order.pop_back();
      alive.insert(v);
      before = saved;
    }
    return false;
  }
};

}  // namespace detail

/// A strong elimination ordering of g, or nothing if g is not strongly
/// chordal.
///
/// Membership is decided first by greedy simple-vertex elimination: every
/// induced subgraph of a strongly chordal graph has a simple vertex, so the
/// greedy pass only gets stuck on graphs that are not strongly chordal. The
/// ordering itself comes from a second simple-vertex elimination that also
/// tracks the precedences the strong condition imposes on later positions,
/// backtracking if a choice leads to a dead end.
inline std::optional<EliminationOrdering> find_seo(const Graph& g) {
  VertexSet alive = VertexSet::full(g.order());
  while (!alive.empty()) {
    Vertex pick = 0;
    for (Vertex v : alive) {
      if (detail::is_simple(g, alive, v)) {
        pick = v;
        break;
      }
    }
    if (pick == 0) return std::nullopt;
    alive.erase(pick);
  }
  detail::SeoSearch search(g);
  if (!search.run()) throw InternalError("strongly chordal graph without a strong elimination ordering");
  EliminationOrdering ord(std::move(search.order));
  if (verify_seo(g, ord)) throw InternalError("constructed ordering failed verification");
  return ord;
}

/// The graph with vertex v renamed to its position in `ord`.
inline Graph relabel_by_ordering(const Graph& g, const EliminationOrdering& ord) {
  detail::check_ordering(g, ord);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = ord.position_of(e.u);
    const int b = ord.position_of(e.v);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph::from_edges(g.order(), edges);
}

struct PaperMaximalRun {
  /// Sets in print order, in the caller's original vertex labels.
  std::vector<VertexSet> printed;
  /// One line per iteration whose S(i) was NIL.
  std::vector<std::string> notes;
};

/// The linear-pass maximal-D2CS enumeration for strongly chordal graphs,
/// executed line by line on the graph relabeled so that vertex i is v_i.
///
///   u  <- max N(1);               print N[u]
///   for i = 2..n:
///     u' <- max {v in N(i) : v < i}
///     P(i) <- max {v in N(u') : v > u'}
///     S(i) <- max {v in N(i) : v > i}
///     if P(i) = NIL or N[S(i)] \ N[P(i)] is nonempty: print N[S(i)]
///
/// An empty max is NIL; NIL u' gives NIL P(i). When S(i) is NIL nothing is
/// printed and a note is recorded. The set difference is computed
/// explicitly, costing O(n / 64) words per iteration rather than O(1).
inline PaperMaximalRun maximal_d2cs_paper(const Graph& g, const EliminationOrdering& ord, bool dedup = false) {
  if (const auto bad = verify_seo(g, ord)) {
    throw InputError("ordering is not a strong elimination ordering: " + bad->describe());
  }
  if (!is_connected(g)) throw InputError("graph must be connected");
  if (g.order() == 0) throw InputError("graph has no vertices");
  const Graph h = relabel_by_ordering(g, ord);
  const int n = h.order();
  if (h.neighbors(1).empty()) {
    throw InputError("first vertex of the ordering has no neighbors");
  }

  auto max_below = [&](Vertex v, Vertex bound) {
    Vertex best = 0;
    for (Vertex w : h.neighbors(v)) {
      if (w < bound) best = w;
    }
    return best;
  };
  auto max_above = [&](Vertex v, Vertex bound) {
    const Vertex top = h.neighbors(v).max();
    return top > bound ? top : 0;
  };
  auto to_original = [&](const VertexSet& s) {
    VertexSet out(n);
    for (Vertex p : s) out.insert(ord.vertex_at(p));
    return out;
  };

  PaperMaximalRun run;
  std::vector<Vertex> pred(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> succ(static_cast<std::size_t>(n) + 1, 0);
  const Vertex u = h.neighbors(1).max();
  run.printed.push_back(to_original(closed_neighborhood(h, u)));
  for (Vertex i = 2; i <= n; ++i) {
    const Vertex u_prime = max_below(i, i);
    pred[static_cast<std::size_t>(i)] = u_prime == 0 ? 0 : max_above(u_prime, u_prime);
    succ[static_cast<std::size_t>(i)] = max_above(i, i);
    const Vertex p = pred[static_cast<std::size_t>(i)];
    const Vertex s = succ[static_cast<std::size_t>(i)];
    if (s == 0) {
      run.notes.push_back("i=" + std::to_string(i) + ": S(i) is NIL, nothing printed");
      continue;
    }
    if (p == 0 || !(closed_neighborhood(h, s) - closed_neighborhood(h, p)).empty()) {
      run.printed.push_back(to_original(closed_neighborhood(h, s)));
    }
  }
  if (dedup) {
    std::vector<VertexSet> unique;
    for (auto& s : run.printed) {
      if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(std::move(s));
    }
    run.printed = std::move(unique);
  }
  return run;
}

/// The inclusion-maximal members of {N[v] : v in V}, canonically sorted.
/// On a strongly chordal graph this is exactly the family of maximal D2CS.
inline std::vector<VertexSet> maximal_d2cs_reference(const Graph& g) {
  std::vector<VertexSet> hoods;
  for (Vertex v = 1; v <= g.order(); ++v) hoods.push_back(closed_neighborhood(g, v));
  canonicalize(hoods);
  std::vector<VertexSet> out;
  for (const auto& s : hoods) {
    const bool absorbed = std::any_of(hoods.begin(), hoods.end(), [&](const VertexSet& t) {
      return s.is_proper_subset_of(t);
    });
    if (!absorbed) out.push_back(s);
  }
  return out;
}

inline BigCount count_maximal_schordal(const Graph& g) {
  return BigCount(static_cast<std::uint64_t>(maximal_d2cs_reference(g).size()));
}

}  // namespace d2cs
