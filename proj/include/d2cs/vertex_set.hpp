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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "d2cs/error.hpp"

namespace d2cs {

/// Vertex ids are 1-based and contiguous: a graph on n vertices uses 1..n.
using Vertex = int;

/// A subset of {1..n} stored as a bit-set over a fixed universe size.
///
/// Equality and hashing look only at the members, so two sets over
/// different universe sizes compare equal when they hold the same ids.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr int kBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* s, std::size_t word) : set_(s), word_(word) {
      if (set_ != nullptr && word_ < set_->words_.size()) {
        bits_ = set_->words_[word_];
        advance_to_set_bit();
      }
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * kBits) + std::countr_zero(bits_) + 1;
    }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      advance_to_set_bit();
      return *this;
    }
    const_iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.word_ == b.word_ && a.bits_ == b.bits_;
    }

   private:
    void advance_to_set_bit() {
      while (bits_ == 0) {
        if (++word_ >= set_->words_.size()) {
          word_ = set_->words_.size();
          return;
        }
        bits_ = set_->words_[word_];
      }
    }

    const VertexSet* set_ = nullptr;
    std::size_t word_ = 0;
    Word bits_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + kBits - 1) / kBits, 0) {
    if (universe < 0) throw InputError("negative vertex-set universe");
  }
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <class Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  /// The set whose bit i (0-based) stands for vertex i+1.
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (; mask != 0; mask &= mask - 1) s.insert(std::countr_zero(mask) + 1);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 1; v <= universe; ++v) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool in_range(Vertex v) const noexcept { return v >= 1 && v <= universe_; }

  void insert(Vertex v) {
    check(v);
    words_[index(v)] |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[index(v)] &= ~bit(v);
  }
  bool contains(Vertex v) const noexcept {
    return in_range(v) && (words_[index(v)] & bit(v)) != 0;
  }

  int size() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Largest member, or 0 when empty.
  Vertex max() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != 0) return static_cast<Vertex>(i * kBits) + (kBits - std::countl_zero(words_[i]));
    }
    return 0;
  }

  /// Drops every member <= v.
  void keep_above(Vertex v) noexcept {
    if (v <= 0) return;
    const std::size_t full = std::min(words_.size(), static_cast<std::size_t>(v) / kBits);
    for (std::size_t i = 0; i < full; ++i) words_[i] = 0;
    if (const int rem = v % kBits; rem != 0 && full < words_.size()) {
      words_[full] &= ~((Word{1} << rem) - 1);
    }
  }

  /// Low 64 members as a bit mask; only meaningful when universe <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.word(i)) != 0) return false;
    }
    return true;
  }
  bool is_proper_subset_of(const VertexSet& o) const noexcept {
    return is_subset_of(o) && !(*this == o);
  }
  bool intersects(const VertexSet& o) const noexcept {
    const std::size_t k = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    grow_to(o);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    const std::size_t k = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (a.word(i) != b.word(i)) return false;
    }
    return true;
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, words_.size()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  /// Members as "1 2 5".
  std::string str() const {
    std::string out;
    for (Vertex v : *this) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    return os << '{' << s.str() << '}';
  }

 private:
  static std::size_t index(Vertex v) noexcept { return static_cast<std::size_t>(v - 1) / kBits; }
  static Word bit(Vertex v) noexcept { return Word{1} << ((v - 1) % kBits); }
  Word word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }

  void check(Vertex v) const {
    if (!in_range(v)) {
      throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(universe_));
    }
  }
  void grow_to(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    universe_ = std::max(universe_, o.universe_);
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

/// Canonical order on vertex sets: lexicographic on the ascending member list,
/// with a proper prefix ordered first.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

/// Sorts a family canonically and drops repeated sets.
inline void canonicalize(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace d2cs
