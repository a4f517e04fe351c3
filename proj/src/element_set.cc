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

#include "onlinerank/element_set.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "onlinerank/errors.h"

namespace onlinerank {

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int e : elements) Insert(e);
}

ElementSet::ElementSet(const std::vector<int>& elements) {
  for (int e : elements) Insert(e);
}

ElementSet ElementSet::Range(int m) {
  ElementSet s;
  if (m <= 0) return s;
  s.words_.assign((m + 63) / 64, ~std::uint64_t{0});
  if (m % 64 != 0) s.words_.back() = (std::uint64_t{1} << (m % 64)) - 1;
  return s;
}

ElementSet ElementSet::FromMask(std::uint64_t mask) {
  ElementSet s;
  if (mask != 0) s.words_.push_back(mask);
  return s;
}

void ElementSet::Insert(int e) {
  if (e < 0) {
    throw InvalidInputError("negative element index " + std::to_string(e));
  }
  const std::size_t w = static_cast<std::size_t>(e) / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (e % 64);
}

void ElementSet::Erase(int e) {
  const std::size_t w = static_cast<std::size_t>(e) / 64;
  if (e < 0 || w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (e % 64));
  Trim();
}

bool ElementSet::Contains(int e) const {
  const std::size_t w = static_cast<std::size_t>(e) / 64;
  if (e < 0 || w >= words_.size()) return false;
  return (words_[w] >> (e % 64)) & 1;
}

int ElementSet::Size() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool ElementSet::Empty() const { return words_.empty(); }

int ElementSet::Max() const {
  if (words_.empty()) return -1;
  const std::uint64_t top = words_.back();
  return static_cast<int>((words_.size() - 1) * 64) + 63 -
         std::countl_zero(top);
}

std::vector<int> ElementSet::Elements() const {
  std::vector<int> out;
  out.reserve(Size());
  ForEach([&](int e) { out.push_back(e); });
  return out;
}

std::uint64_t ElementSet::ToMask() const {
  assert(words_.size() <= 1);
  return words_.empty() ? 0 : words_[0];
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size());
  for (std::size_t w = 0; w < other.words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  Trim();
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  Trim();
  return *this;
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  return a.words_ == b.words_;
}

void ElementSet::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool LexLess(const ElementSet& a, const ElementSet& b) {
  const std::vector<int> ea = a.Elements();
  const std::vector<int> eb = b.Elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                      eb.end());
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  bool first = true;
  s.ForEach([&](int e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  return os << '}';
}

}  // namespace onlinerank
