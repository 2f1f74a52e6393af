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

#include "d2cs/formulas.hpp"

namespace d2cs::formulas {
namespace {

TEST(Sequences, FibonacciAndLucas) {
  EXPECT_EQ(fib(0), BigCount(0));
  EXPECT_EQ(fib(1), BigCount(1));
  EXPECT_EQ(fib(7), BigCount(13));
  EXPECT_EQ(lucas(0), BigCount(2));
  EXPECT_EQ(lucas(1), BigCount(1));
  EXPECT_EQ(lucas(4), BigCount(7));
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(lucas(n), fib(n - 1) + fib(n + 1)) << n;
  EXPECT_THROW(fib(-1), InputError);
}

TEST(CountStar, Examples) {
  EXPECT_EQ(count_star(2), BigCount(7));
  EXPECT_EQ(count_star(0), BigCount(2));
  EXPECT_EQ(count_star(10), BigCount(1035));
}

TEST(CountKary, Examples) {
  EXPECT_EQ(count_kary(2, 1), BigCount(7));
  EXPECT_EQ(count_kary(2, 2), BigCount(23));
  EXPECT_EQ(count_kary(3, 1), BigCount(12));
  EXPECT_EQ(count_kary(3, 2), BigCount(63));
  EXPECT_EQ(count_kary(2, 3), BigCount(55));
  EXPECT_THROW(count_kary(1, 3), InputError);
  EXPECT_THROW(count_kary(2, 0), InputError);
}

TEST(CountKary, ClosedFormMatchesRecurrenceAndIncreases) {
  for (int k = 2; k <= 6; ++k) {
    for (int h = 1; h <= 5; ++h) {
      EXPECT_EQ(count_kary(k, h), count_kary_recurrence(k, h)) << k << "," << h;
      if (h > 1) {
        EXPECT_LT(count_kary(k, h - 1), count_kary(k, h));
      }
    }
    EXPECT_EQ(count_kary(k, 1), count_star(k));
  }
}

TEST(KaryBounds, Examples) {
  const auto b = kary_bounds(3, 2);
  EXPECT_EQ(b.lower, BigCount(12));
  EXPECT_EQ(b.upper, BigCount(36));
  EXPECT_EQ(b.fmax, BigCount(36));
  EXPECT_EQ(kary_bounds(4, 2).lower, BigCount(21));
  EXPECT_THROW(kary_bounds(2, 3), InputError);
  EXPECT_THROW(kary_bounds(3, 1), InputError);
}

TEST(KaryBounds, UpperEqualsExtremalCount) {
  for (int k = 3; k <= 8; ++k) {
    for (int h = 2; h <= 6; ++h) {
      const auto b = kary_bounds(k, h);
      EXPECT_EQ(b.upper, b.fmax) << k << "," << h;
      EXPECT_LE(b.lower, b.fmax);
    }
  }
}

TEST(CountFibTree, Examples) {
  EXPECT_EQ(count_fib_tree(2), BigCount(2));
  EXPECT_EQ(count_fib_tree(3), BigCount(4));
  EXPECT_EQ(count_fib_tree(4), BigCount(7));
  EXPECT_EQ(count_fib_tree(10), BigCount(647));
  EXPECT_THROW(count_fib_tree(1), InputError);
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(count_fib_tree(n), count_fib_tree_recurrence(n)) << n;
}

TEST(CountBinaryFibTree, Examples) {
  EXPECT_EQ(count_binary_fib_tree(3), BigCount(10));
  EXPECT_EQ(count_binary_fib_tree(4), BigCount(21));
  EXPECT_EQ(count_binary_fib_tree(5), BigCount(40));
  EXPECT_EQ(count_binary_fib_tree(6), BigCount(70));
  EXPECT_THROW(count_binary_fib_tree(2), InputError);
  for (int n = 3; n <= 30; ++n) EXPECT_EQ(count_binary_fib_tree(n), count_binary_fib_tree_recurrence(n)) << n;
}

TEST(CountBinomialTree, Examples) {
  EXPECT_EQ(count_binomial_tree(0), BigCount(2));
  EXPECT_EQ(count_binomial_tree(2), BigCount(10));
  EXPECT_EQ(count_binomial_tree(4), BigCount(66));
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(count_binomial_tree(k), count_binomial_tree_recurrence(k)) << k;
}

TEST(CountBinomialTree, ExactBeyondSixtyFourBits) {
  EXPECT_EQ(count_binomial_tree(64).str(), "1180591620717411303426");
}

TEST(CountSplit, Examples) {
  EXPECT_EQ(count_split(1, 3), BigCount(12));
  EXPECT_EQ(count_split(2, 2), BigCount(20));
  EXPECT_EQ(count_split(3, 1), BigCount(23));
  for (int r = 1; r <= 10; ++r) EXPECT_EQ(count_split(1, r), count_star(r));
  EXPECT_THROW(count_split(0, 1), InputError);
}

TEST(SimpleFamilyCounts, Examples) {
  EXPECT_EQ(count_complete(3), BigCount(8));
  EXPECT_EQ(count_empty(3), BigCount(4));
  EXPECT_EQ(count_ladder(2), BigCount(14));
  EXPECT_EQ(count_ktree(3, 2), BigCount(8));
  // The 1-tree P_3 has 7 D2CS; the formula gives 8.
  EXPECT_EQ(count_ktree(3, 1), BigCount(8));
  EXPECT_TRUE(kKTreeDisputed);
  EXPECT_THROW(count_ktree(2, 2), InputError);
}

}  // namespace
}  // namespace d2cs::formulas
