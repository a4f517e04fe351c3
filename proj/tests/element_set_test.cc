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

#include <sstream>

#include "gtest/gtest.h"

namespace onlinerank {
namespace {

TEST(ElementSetTest, BasicOperations) {
  ElementSet s{1, 5, 70};
  EXPECT_EQ(s.Size(), 3);
  EXPECT_TRUE(s.Contains(70));
  EXPECT_FALSE(s.Contains(2));
  EXPECT_EQ(s.Max(), 70);
  s.Erase(70);
  EXPECT_EQ(s, (ElementSet{1, 5}));
  EXPECT_EQ(s.ToMask(), 0b100010u);
  EXPECT_TRUE(ElementSet().Empty());
}

TEST(ElementSetTest, SetAlgebra) {
  const ElementSet a{0, 1, 2};
  const ElementSet b{2, 3};
  EXPECT_EQ(a | b, (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(a & b, (ElementSet{2}));
  EXPECT_EQ(a - b, (ElementSet{0, 1}));
  EXPECT_TRUE((a & b).IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
  EXPECT_EQ(ElementSet::Range(4), (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(ElementSet::FromMask(0b1010), (ElementSet{1, 3}));
}

TEST(ElementSetTest, EqualityIgnoresTrailingStorage) {
  ElementSet a{100};
  a.Erase(100);
  EXPECT_EQ(a, ElementSet());
}

TEST(ElementSetTest, LexOrderAndPrinting) {
  EXPECT_TRUE(LexLess(ElementSet{0, 3}, ElementSet{1}));
  EXPECT_TRUE(LexLess(ElementSet{0}, ElementSet{0, 1}));
  EXPECT_FALSE(LexLess(ElementSet{1}, ElementSet{1}));
  std::ostringstream out;
  out << ElementSet{2, 0};
  EXPECT_EQ(out.str(), "{0,2}");
}

}  // namespace
}  // namespace onlinerank
