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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "d2cs/error.hpp"

namespace d2cs {

/// Exact nonnegative integer used for every count the library reports.
///
/// Intermediate arithmetic in the formulas is done on the signed `Int`
/// and only converted once the result is known; conversion of a negative
/// value is an internal error, never a silent wrap.
class BigCount {
 public:
  using Int = boost::multiprecision::cpp_int;

  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(Int v) : value_(std::move(v)) {
    if (value_ < 0) {
      throw InternalError("negative count: " + value_.str());
    }
  }

  const Int& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(const BigCount& a, const BigCount& b) {
    return BigCount(Int(a.value_ * b.value_));
  }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigCount& a,
                                          const BigCount& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigCount& c) {
    return os << c.value_.str();
  }

 private:
  Int value_{0};
};

/// 2^e as an exact integer.
inline BigCount::Int pow2(unsigned e) {
  BigCount::Int r = 1;
  r <<= e;
  return r;
}

inline BigCount::Int ipow(BigCount::Int base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

}  // namespace d2cs
