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

#include <sstream>
#include <string>

#include "d2cs/generators.hpp"
#include "d2cs/io.hpp"

namespace d2cs {
namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ReadEdgeList, AcceptsCommentsAndBlankLines) {
  const Graph g = parse("# a path\n\n4 3\n1 2  # first\n2 3\n\n3 4\n");
  EXPECT_EQ(g, gen_path(4));
  EXPECT_EQ(parse("3 0\n").order(), 3);
  EXPECT_EQ(parse("0 0\n").order(), 0);
}

TEST(ReadEdgeList, RejectsMalformedInput) {
  EXPECT_NE(error_of(""), "");
  EXPECT_NE(error_of("3\n"), "");
  EXPECT_NE(error_of("3 1\n1 x\n"), "");
  EXPECT_NE(error_of("3 1\n1 2 3\n"), "");
  EXPECT_NE(error_of("3 1\n1 4\n"), "");
  EXPECT_NE(error_of("3 1\n0 1\n"), "");
  EXPECT_NE(error_of("3 1\n2 2\n"), "");
  EXPECT_NE(error_of("3 2\n1 2\n1 2\n"), "");
  EXPECT_NE(error_of("3 2\n1 2\n"), "");
  EXPECT_NE(error_of("3 1\n1 2\n2 3\n"), "");
  EXPECT_NE(error_of("3 5\n"), "");
  EXPECT_NE(error_of("-1 0\n"), "");
}

TEST(ReadEdgeList, RejectsReversedPairs) {
  EXPECT_NE(error_of("2 1\n2 1\n").find("u < v"), std::string::npos);
}

TEST(ReadEdgeList, ReportsLineNumbers) {
  EXPECT_NE(error_of("# header next\n3 2\n1 2\n2 2\n").find("line 4"), std::string::npos);
  EXPECT_NE(error_of("3 1\n\n1 5\n").find("line 3"), std::string::npos);
}

TEST(ReadEdgeListFile, MissingFile) {
  EXPECT_THROW(read_edge_list_file("/nonexistent/d2cs/graph.txt"), InputError);
}

TEST(WriteEdgeList, RoundTripsGeneratedGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen_random_connected(3 + static_cast<int>(seed % 10), 0.35, seed);
    std::ostringstream out;
    write_edge_list(out, g);
    EXPECT_EQ(parse(out.str()), g);
  }
  std::ostringstream out;
  write_edge_list(out, gen_star(3));
  EXPECT_EQ(out.str(), "4 3\n1 2\n1 3\n1 4\n");
}

}  // namespace
}  // namespace d2cs
