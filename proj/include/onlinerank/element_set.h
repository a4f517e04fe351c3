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

#ifndef ONLINERANK_ELEMENT_SET_H_
#define ONLINERANK_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace onlinerank {

// Set of ground-set elements, stored as a dynamically sized bitset. Elements
// are nonnegative indices; the ground-set bound is enforced by the matroid
// that consumes the set, not here.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<int> elements);
  explicit ElementSet(const std::vector<int>& elements);

  // {0, 1, ..., m-1}.
  static ElementSet Range(int m);
  static ElementSet FromMask(std::uint64_t mask);

  void Insert(int e);
  void Erase(int e);
  bool Contains(int e) const;

  int Size() const;
  bool Empty() const;
  // Largest element, or -1 when empty.
  int Max() const;

  // Ascending order.
  std::vector<int> Elements() const;

  // Requires every element < 64.
  std::uint64_t ToMask() const;

  bool IsSubsetOf(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }
  friend bool operator==(const ElementSet& a, const ElementSet& b);

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of the ascending element lists.
bool LexLess(const ElementSet& a, const ElementSet& b);

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

}  // namespace onlinerank

#endif  // ONLINERANK_ELEMENT_SET_H_
