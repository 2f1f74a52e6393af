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

#include <string>

#include "d2cs/big_count.hpp"
#include "d2cs/error.hpp"

// Exact closed forms for the number of D2CS in structured graph families.
// Where a family also has a defining recurrence, `*_recurrence` iterates it
// so the two routes can be checked against each other.

namespace d2cs::formulas {

using Int = BigCount::Int;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline Int fib(int n) {
  Int a = 0;
  Int b = 1;
  for (int i = 0; i < n; ++i) {
    Int t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Int lucas(int n) {
  if (n == 0) return 2;
  return fib(n - 1) + fib(n + 1);
}

// f(k, 1) = 2^k + k + 1
inline Int kary_base(int k) { return pow2(static_cast<unsigned>(k)) + k + 1; }

inline Int kary(int k, int h) {
  // k/(k-1) * (f(k+1,1) - 4) * (k^(h-1) - 1) + f(k,1); (k-1) | k^(h-1) - 1.
  const Int geometric = ipow(Int(k), static_cast<unsigned>(h - 1)) - 1;
  if (geometric % (k - 1) != 0) throw InternalError("k^(h-1)-1 not divisible by k-1");
  return Int(k) * (kary_base(k + 1) - 4) * (geometric / (k - 1)) + kary_base(k);
}

}  // namespace detail

/// F_0 = 0, F_1 = 1.
inline BigCount fib(int n) {
  detail::require(n >= 0, "fib needs n >= 0");
  return BigCount(detail::fib(n));
}

/// L_0 = 2, L_1 = 1.
inline BigCount lucas(int n) {
  detail::require(n >= 0, "lucas needs n >= 0");
  return BigCount(detail::lucas(n));
}

/// K_{1,n}: 2^n + n + 1.
inline BigCount count_star(int n) {
  detail::require(n >= 0, "star needs n >= 0");
  return BigCount(pow2(static_cast<unsigned>(n)) + n + 1);
}

/// Complete k-ary tree of height h. Singular at k = 1.
inline BigCount count_kary(int k, int h) {
  if (k == 1) {
    throw InputError("kary formula is singular at k=1 (divides by k-1); count paths with the oracle");
  }
  detail::require(k >= 2 && h >= 1, "kary formula needs k >= 2 and h >= 1");
  return BigCount(detail::kary(k, h));
}

/// f(k,h) = f(k,h-1) + k^(h-1) (2^(k+1) + k - 2), from f(k,1).
inline BigCount count_kary_recurrence(int k, int h) {
  detail::require(k >= 2 && h >= 1, "kary recurrence needs k >= 2 and h >= 1");
  Int f = detail::kary_base(k);
  for (int level = 2; level <= h; ++level) {
    f += ipow(Int(k), static_cast<unsigned>(level - 1)) * (pow2(static_cast<unsigned>(k + 1)) + k - 2);
  }
  return BigCount(f);
}

struct KaryBounds {
  BigCount lower;
  BigCount upper;
  BigCount fmax;
};

/// Lower and upper bounds on the D2CS count of a rooted tree with maximum
/// degree k and height h, plus the extremal count the upper bound comes from.
/// l divides by k-2, so k >= 3; the division must be exact.
inline KaryBounds kary_bounds(int k, int h) {
  if (k < 3) {
    throw InputError("kary bounds are singular for k < 3 (l divides by k-2)");
  }
  detail::require(h >= 2, "kary bounds need h >= 2");
  const Int lower = pow2(static_cast<unsigned>(k)) + k + 3 * h - 5;
  const Int numer = Int(k - 1) * (Int(k) * ipow(Int(k - 1), static_cast<unsigned>(h - 2)) - 2);
  if (numer % (k - 2) != 0) {
    throw InternalError("l is not an integer at k=" + std::to_string(k) + ", h=" + std::to_string(h));
  }
  const Int l = numer / (k - 2);
  const Int upper = (pow2(static_cast<unsigned>(k)) + k - 3) * (2 + l) + 4;
  const Int fmax = detail::kary(k - 1, h) + detail::kary(k - 1, h - 1) + pow2(static_cast<unsigned>(k)) - 2;
  return {BigCount(lower), BigCount(upper), BigCount(fmax)};
}

/// g(n) = 3 * 2^(n-2) - L_n + 2.
inline BigCount count_fib_tree(int n) {
  detail::require(n >= 2, "fibonacci tree formula needs n >= 2");
  return BigCount(3 * pow2(static_cast<unsigned>(n - 2)) - detail::lucas(n) + 2);
}

/// g(n) = g(n-1) + g(n-2) + 3 * 2^(n-4) - 2 from g(2) = 2, g(3) = 4.
inline BigCount count_fib_tree_recurrence(int n) {
  detail::require(n >= 2, "fibonacci tree recurrence needs n >= 2");
  Int prev = 2;
  Int cur = 4;
  if (n == 2) return BigCount(prev);
  for (int i = 4; i <= n; ++i) {
    Int next = cur + prev + 3 * pow2(static_cast<unsigned>(i - 4)) - 2;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return BigCount(cur);
}

/// h(n) = 2 F_n + 3 F_(n+2) - 9.
inline BigCount count_binary_fib_tree(int n) {
  detail::require(n >= 3, "binary fibonacci tree formula needs n >= 3");
  return BigCount(2 * detail::fib(n) + 3 * detail::fib(n + 2) - 9);
}

/// h(n) = h(n-1) + h(n-2) + 9 from h(3) = 10, h(4) = 21.
inline BigCount count_binary_fib_tree_recurrence(int n) {
  detail::require(n >= 3, "binary fibonacci tree recurrence needs n >= 3");
  Int prev = 10;
  Int cur = 21;
  if (n == 3) return BigCount(prev);
  for (int i = 5; i <= n; ++i) {
    Int next = cur + prev + 9;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return BigCount(cur);
}

/// b(k) = k 2^k + 2.
inline BigCount count_binomial_tree(int k) {
  detail::require(k >= 0, "binomial tree formula needs k >= 0");
  return BigCount(Int(k) * pow2(static_cast<unsigned>(k)) + 2);
}

/// b(k) = 2 b(k-1) + 2^k - 2 from b(0) = 2.
inline BigCount count_binomial_tree_recurrence(int k) {
  detail::require(k >= 0, "binomial tree recurrence needs k >= 0");
  Int b = 2;
  for (int i = 1; i <= k; ++i) b = 2 * b + pow2(static_cast<unsigned>(i)) - 2;
  return BigCount(b);
}

/// Clique of size k, each clique vertex with r private pendants:
/// k 2^(k-1) (2^r - 1) + 2^k + k r.
inline BigCount count_split(int k, int r) {
  detail::require(k >= 1 && r >= 1, "split formula needs k >= 1 and r >= 1");
  return BigCount(Int(k) * pow2(static_cast<unsigned>(k - 1)) * (pow2(static_cast<unsigned>(r)) - 1) +
                  pow2(static_cast<unsigned>(k)) + Int(k) * r);
}

inline BigCount count_complete(int n) {
  detail::require(n >= 1, "complete formula needs n >= 1");
  return BigCount(pow2(static_cast<unsigned>(n)));
}

inline BigCount count_empty(int n) {
  detail::require(n >= 1, "empty formula needs n >= 1");
  return BigCount(Int(n) + 1);
}

inline BigCount count_ladder(int n) {
  detail::require(n >= 1, "ladder formula needs n >= 1");
  return BigCount(Int(10) * n - 6);
}

/// 2^n (1 - 2^-(k+1)) + n - k, as 2^n - 2^(n-k-1) + n - k. The value is
/// reported as disputed: it does not depend on the k-tree's shape.
inline BigCount count_ktree(int n, int k) {
  detail::require(k >= 1 && n >= k + 1, "ktree formula needs n >= k+1 >= 2");
  return BigCount(pow2(static_cast<unsigned>(n)) - pow2(static_cast<unsigned>(n - k - 1)) + n - k);
}

inline constexpr bool kKTreeDisputed = true;

}  // namespace d2cs::formulas
