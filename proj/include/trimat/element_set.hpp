// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIMAT_ELEMENT_SET_HPP
#define TRIMAT_ELEMENT_SET_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace trimat {

/// Fixed-capacity set of element indices (0..127).
///
/// Every matroid in this library numbers its ground set 0..n-1 and all rank
/// queries take an ElementSet over those indices.
class ElementSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr ElementSet() = default;
  constexpr ElementSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
  ElementSet(std::initializer_list<int> xs) {
    for (int x : xs) set(x);
  }

  static constexpr ElementSet full(int n) {
    if (n <= 0) return ElementSet();
    if (n < 64) return ElementSet((std::uint64_t{1} << n) - 1, 0);
    if (n == 64) return ElementSet(~std::uint64_t{0}, 0);
    if (n < 128) return ElementSet(~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1);
    return ElementSet(~std::uint64_t{0}, ~std::uint64_t{0});
  }
  static constexpr ElementSet single(int i) {
    ElementSet s;
    s.set(i);
    return s;
  }

  constexpr bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  constexpr int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
  constexpr bool subset_of(const ElementSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  constexpr bool intersects(const ElementSet& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }
  /// Smallest member, or -1 when empty.
  constexpr int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }
  /// Largest member, or -1 when empty.
  constexpr int last() const {
    if (w_[1]) return 127 - std::countl_zero(w_[1]);
    if (w_[0]) return 63 - std::countl_zero(w_[0]);
    return -1;
  }

  constexpr std::uint64_t word(int i) const { return w_[i]; }

  constexpr ElementSet operator|(const ElementSet& o) const { return ElementSet(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
  constexpr ElementSet operator&(const ElementSet& o) const { return ElementSet(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
  constexpr ElementSet operator^(const ElementSet& o) const { return ElementSet(w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]); }
  /// Set difference.
  constexpr ElementSet operator-(const ElementSet& o) const { return ElementSet(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }
  constexpr ElementSet& operator|=(const ElementSet& o) { return *this = *this | o; }
  constexpr ElementSet& operator&=(const ElementSet& o) { return *this = *this & o; }
  constexpr ElementSet& operator^=(const ElementSet& o) { return *this = *this ^ o; }
  constexpr ElementSet& operator-=(const ElementSet& o) { return *this = *this - o; }
  constexpr ElementSet with(int i) const {
    ElementSet s = *this;
    s.set(i);
    return s;
  }
  constexpr ElementSet without(int i) const {
    ElementSet s = *this;
    s.reset(i);
    return s;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Orders by the highest differing element (colex order).
  constexpr std::strong_ordering operator<=>(const ElementSet& o) const {
    if (w_[1] != o.w_[1]) return w_[1] <=> o.w_[1];
    return w_[0] <=> o.w_[0];
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr iterator(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
    constexpr int operator*() const { return w_[0] ? std::countr_zero(w_[0]) : 64 + std::countr_zero(w_[1]); }
    constexpr iterator& operator++() {
      if (w_[0]) w_[0] &= w_[0] - 1;
      else w_[1] &= w_[1] - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator& o) const { return w_[0] == o.w_[0] && w_[1] == o.w_[1]; }

   private:
    std::uint64_t w_[2] = {0, 0};
  };
  constexpr iterator begin() const { return iterator(w_[0], w_[1]); }
  constexpr iterator end() const { return iterator(); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for (int i : *this) v.push_back(i);
    return v;
  }
  static ElementSet from(const std::vector<int>& xs) {
    ElementSet s;
    for (int x : xs) s.set(x);
    return s;
  }

 private:
  std::uint64_t w_[2] = {0, 0};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= (s.word(1) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)) * 0xBF58476D1CE4E5B9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Calls f(subset) for every k-subset of `from`, in lexicographic order of
/// positions. Stops early when f returns false. Returns false iff stopped.
template <class F>
bool for_each_subset_of_size(const ElementSet& from, int k, F&& f) {
  const std::vector<int> items = from.to_vector();
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return true;
  if (k == 0) return f(ElementSet{}) != false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet s;
    for (int i : idx) s.set(items[i]);
    if (f(s) == false) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls f(subset) for every subset of `from` (2^|from| calls). Same
/// early-exit convention as for_each_subset_of_size.
template <class F>
bool for_each_subset(const ElementSet& from, F&& f) {
  const std::vector<int> items = from.to_vector();
  const int n = static_cast<int>(items.size());
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    ElementSet s;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.set(items[i]);
    if (f(s) == false) return false;
  }
  return true;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > (static_cast<unsigned __int128>(1) << 62)) return std::uint64_t{1} << 62;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace trimat

template <>
struct std::hash<trimat::ElementSet> : trimat::ElementSetHash {};

#endif  // TRIMAT_ELEMENT_SET_HPP
