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

#include <cstdint>
#include <string>
#include <vector>

#include "d2cs/big_count.hpp"
#include "d2cs/error.hpp"
#include "d2cs/graph.hpp"

namespace d2cs {

namespace detail {

template <class Emit>
void extend_cliques(const Graph& g, VertexSet& clique, const VertexSet& candidates, Emit& emit) {
  for (Vertex w : candidates) {
    clique.insert(w);
    if (clique.size() >= 3) emit(static_cast<const VertexSet&>(clique));
    VertexSet next = candidates & g.neighbors(w);
    // Only vertices above w, so each clique is built in exactly one order.
    next.keep_above(w);
    if (!next.empty()) extend_cliques(g, clique, next, emit);
    clique.erase(w);
  }
}

}  // namespace detail

/// Every clique of g with at least three vertices, each once, in canonical
/// (lexicographic) order. A clique is only ever extended by vertices larger
/// than its current maximum.
template <class Emit>
void enum_cliques_min3(const Graph& g, Emit&& emit) {
  VertexSet clique(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) {
    VertexSet above = g.neighbors(v);
    above.keep_above(v);
    clique.insert(v);
    detail::extend_cliques(g, clique, above, emit);
    clique.erase(v);
  }
}

/// diam(G[S]) <= 2 via a depth-2 search from each member inside S.
/// Assumes S is a clique of the square; that is not re-checked.
inline bool d2cs_filter(const Graph& g, const VertexSet& candidate) {
  for (Vertex u : candidate) {
    const VertexSet near = g.neighbors(u) & candidate;
    VertexSet reach = near;
    reach.insert(u);
    for (Vertex w : near) reach |= g.neighbors(w) & candidate;
    if (!candidate.is_subset_of(reach)) return false;
  }
  return true;
}

/// Counts all D2CS of a connected graph by filtering the cliques of its
/// square: |{S : S clique of G^2, |S| >= 3, diam(G[S]) <= 2}| + n + m + 1.
/// `emit` receives each surviving set of size >= 3, in canonical order.
template <class Emit>
BigCount enum_all_d2cs(const Graph& g, Emit&& emit) {
  if (const auto comps = connected_components(g); comps.size() > 1) {
    std::string sizes;
    for (const auto& c : comps) sizes += (sizes.empty() ? "" : ", ") + std::to_string(c.size());
    throw InputError("graph is disconnected: " + std::to_string(comps.size()) +
                     " components of sizes " + sizes);
  }
  const Graph square = graph_square(g);
  std::uint64_t kept = 0;
  enum_cliques_min3(square, [&](const VertexSet& s) {
    if (d2cs_filter(g, s)) {
      ++kept;
      emit(s);
    }
  });
  return BigCount(kept) + BigCount(static_cast<std::uint64_t>(g.order())) +
         BigCount(static_cast<std::uint64_t>(g.size())) + BigCount(1);
}

inline BigCount enum_all_d2cs(const Graph& g) {
  return enum_all_d2cs(g, [](const VertexSet&) {});
}

}  // namespace d2cs
