// Copyright 2026 The submodbb Authors
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

#ifndef SUBMODBB_SOLUTION_HPP_
#define SUBMODBB_SOLUTION_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace submodbb {

// Elements are 0-based inside the library. Files and the CLI use 1-based ids;
// convert with Solution::FromOneBased / ToOneBased at those boundaries only.
using Element = int;

// Objective comparisons (incumbent updates, termination, pruning) use this
// absolute tolerance.
inline constexpr double kEps = 1e-9;

// A subset of the ground set {0..kMaxElements-1} stored as a dense bitmask.
class Solution {
 public:
  static constexpr int kWords = 4;
  static constexpr int kMaxElements = 64 * kWords;

  constexpr Solution() = default;
  Solution(std::initializer_list<Element> elements) {
    for (Element e : elements) Insert(e);
  }

  static Solution FromOneBased(const std::vector<int>& ids) {
    Solution s;
    for (int id : ids) {
      if (id < 1 || id > kMaxElements) {
        throw std::out_of_range("element id " + std::to_string(id) +
                                " out of range");
      }
      s.Insert(id - 1);
    }
    return s;
  }

  // The full set {0..n-1}.
  static Solution Full(int n) {
    Solution s;
    for (Element e = 0; e < n; ++e) s.Insert(e);
    return s;
  }

  bool Contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void Insert(Element e) {
    CheckElement(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  void Erase(Element e) {
    CheckElement(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }
  Solution With(Element e) const {
    Solution s = *this;
    s.Insert(e);
    return s;
  }
  Solution Without(Element e) const {
    Solution s = *this;
    s.Erase(e);
    return s;
  }

  int Size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool Empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Largest member, or -1 for the empty set.
  Element Max() const {
    for (int i = kWords - 1; i >= 0; --i) {
      if (words_[i] != 0) return 64 * i + 63 - std::countl_zero(words_[i]);
    }
    return -1;
  }

  // True when every member is < n.
  bool FitsIn(int n) const { return Max() < n; }

  std::vector<Element> Elements() const {
    std::vector<Element> out;
    out.reserve(Size());
    ForEach([&](Element e) { out.push_back(e); });
    return out;
  }
  std::vector<int> ToOneBased() const {
    std::vector<int> out;
    ForEach([&](Element e) { out.push_back(e + 1); });
    return out;
  }

  // Visits members in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(64 * i + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  Solution operator|(const Solution& o) const {
    Solution s;
    for (int i = 0; i < kWords; ++i) s.words_[i] = words_[i] | o.words_[i];
    return s;
  }
  Solution operator&(const Solution& o) const {
    Solution s;
    for (int i = 0; i < kWords; ++i) s.words_[i] = words_[i] & o.words_[i];
    return s;
  }
  // Set difference.
  Solution operator-(const Solution& o) const {
    Solution s;
    for (int i = 0; i < kWords; ++i) s.words_[i] = words_[i] & ~o.words_[i];
    return s;
  }
  bool IsSubsetOf(const Solution& o) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }
  bool Intersects(const Solution& o) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

  bool operator==(const Solution&) const = default;

  // Lexicographic order on the increasing member sequences, so {1,2} < {1,3}
  // and {1} < {1,2}.
  std::strong_ordering LexCompare(const Solution& o) const {
    for (int i = 0; i < kWords; ++i) {
      const std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff == 0) continue;
      // d is the smallest element in exactly one of the sets; members below d
      // agree. The holder of d is smaller iff the other set has a member
      // above d (otherwise the other set is a proper prefix).
      const int bit = std::countr_zero(diff);
      const bool mine = (words_[i] >> bit) & 1u;
      const Solution& other = mine ? o : *this;
      const std::uint64_t above = ~((std::uint64_t{2} << bit) - 1);
      bool other_has_more = (other.words_[i] & above) != 0;
      for (int j = i + 1; j < kWords && !other_has_more; ++j) {
        other_has_more = other.words_[j] != 0;
      }
      const bool holder_smaller = other_has_more;
      if (mine == holder_smaller) return std::strong_ordering::less;
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::uint64_t Hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 31;
    }
    return h;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  // 1-based, e.g. "{1,3}".
  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    ForEach([&](Element e) {
      if (!first) out += ',';
      out += std::to_string(e + 1);
      first = false;
    });
    return out + "}";
  }

 private:
  static void CheckElement(Element e) {
    if (e < 0 || e >= kMaxElements) {
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside solution capacity");
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct SolutionHash {
  std::size_t operator()(const Solution& s) const {
    return static_cast<std::size_t>(s.Hash());
  }
};

}  // namespace submodbb

#endif  // SUBMODBB_SOLUTION_HPP_
