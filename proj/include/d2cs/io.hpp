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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "d2cs/error.hpp"
#include "d2cs/graph.hpp"

// Edge-list files:
//
//   # optional comments, anywhere after '#'
//   n m
//   u v        (m lines, 1 <= u < v <= n)
//
// Self-loops, repeated edges, reversed pairs and a wrong edge count are
// all rejected.

namespace d2cs {

namespace detail {

inline std::string located(int line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

/// Next line with content, comments stripped; false at end of input.
inline bool next_content_line(std::istream& in, int& line_no, std::string& line) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

inline std::vector<long long> parse_ints(const std::string& line, int line_no, std::size_t expected) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InputError(located(line_no, "expected an integer, got '" + tok + "'"));
    }
    if (used != tok.size()) throw InputError(located(line_no, "expected an integer, got '" + tok + "'"));
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw InputError(located(line_no, "expected " + std::to_string(expected) + " integers, got " +
                                          std::to_string(out.size())));
  }
  return out;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  int line_no = 0;
  std::string line;
  if (!detail::next_content_line(in, line_no, line)) throw InputError("empty graph file: missing 'n m' header");
  const auto header = detail::parse_ints(line, line_no, 2);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 0 || n > 1'000'000) throw InputError(detail::located(line_no, "vertex count out of range"));
  if (m < 0 || m > n * (n - 1) / 2) throw InputError(detail::located(line_no, "edge count out of range"));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (detail::next_content_line(in, line_no, line)) {
    const auto uv = detail::parse_ints(line, line_no, 2);
    if (static_cast<long long>(edges.size()) == m) {
      throw InputError(detail::located(line_no, "more edges than the header's m=" + std::to_string(m)));
    }
    const long long u = uv[0];
    const long long v = uv[1];
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InputError(detail::located(line_no, "endpoint outside 1.." + std::to_string(n)));
    }
    if (u == v) throw InputError(detail::located(line_no, "self-loop at vertex " + std::to_string(u)));
    if (u > v) throw InputError(detail::located(line_no, "edge must be written with u < v"));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("header promises " + std::to_string(m) + " edges, file has " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_edge_list(out, g);
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace d2cs
