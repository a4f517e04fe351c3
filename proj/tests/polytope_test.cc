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

#include "onlinerank/polytope.h"

#include <vector>

#include "gtest/gtest.h"
#include "onlinerank/errors.h"
#include "onlinerank/generate.h"
#include "onlinerank/rng.h"
#include "testing/oracles.h"

namespace onlinerank {
namespace {

Matroid Triangle() { return Matroid(GraphicSpec{3, {{0, 1}, {1, 2}, {2, 0}}}); }

TEST(PolytopeTest, MembershipExamples) {
  EXPECT_TRUE(InPolytope(Triangle(), {0, 0, 0}));
  EXPECT_FALSE(InPolytope(Matroid(UniformSpec{3, 1}), {0.5, 0.5, 0.1}));
  const FracPoint x{0.7, 0.7, 0.6};
  EXPECT_DOUBLE_EQ(testing::MaxExcess(Triangle().spec(), x), 0.0);
  EXPECT_TRUE(InPolytope(Triangle(), x));
  EXPECT_FALSE(InPolytope(Triangle(), {0.7, 0.7, 0.7}));
}

TEST(PolytopeTest, HeadroomExamples) {
  EXPECT_DOUBLE_EQ(Headroom(Matroid(UniformSpec{5, 2}), FracPoint(5, 0.0), 3),
                   1.0);
  const Matroid u(UniformSpec{3, 1});
  EXPECT_NEAR(Headroom(u, {0.5, 0.5, 0}, 2),
              testing::Headroom(u.spec(), {0.5, 0.5, 0}, 2), 1e-12);
  EXPECT_NEAR(Headroom(u, {0.5, 0.5, 0}, 2), 0.0, 1e-12);
  const Matroid p(PartitionSpec{3, {{0, 1}, {2}}, {1, 1}});
  EXPECT_NEAR(Headroom(p, {0.3, 0.2, 0}, 0), 0.8, 1e-12);
  EXPECT_NEAR(testing::Headroom(p.spec(), {0.3, 0.2, 0}, 0), 0.8, 1e-12);
}

TEST(PolytopeTest, MinSlackExamples) {
  const Matroid u(UniformSpec{3, 1});
  EXPECT_GE(MinSlack(Triangle(), {0, 0, 0}, 1), 1.0);
  EXPECT_NEAR(MinSlack(u, {0.5, 0.5, 0}, 0), 0.0, 1e-12);
  EXPECT_NEAR(MinSlack(u, {0.2, 0.2, 0.2}, 0), 0.4, 1e-12);
}

TEST(PolytopeTest, MaximalTightSetExamples) {
  const Matroid u(UniformSpec{3, 1});
  EXPECT_EQ(MaximalTightSet(u, {0, 0, 0}), ElementSet());
  EXPECT_EQ(MaximalTightSet(u, {0.5, 0.5, 0}), (ElementSet{0, 1, 2}));
  const Matroid p(PartitionSpec{4, {{0, 1}, {2, 3}}, {1, 1}});
  EXPECT_EQ(MaximalTightSet(p, {1, 0, 0.2, 0.2}), (ElementSet{0, 1}));
}

TEST(PolytopeTest, CapabilityLimit) {
  std::vector<std::pair<int, int>> path;
  for (int v = 0; v < 17; ++v) path.push_back({v, v + 1});
  const Matroid big(GraphicSpec{18, path});
  EXPECT_THROW(InPolytope(big, FracPoint(17, 0.0)), CapabilityError);
  EXPECT_THROW(Headroom(big, FracPoint(17, 0.0), 0), CapabilityError);
  // Closed forms have no limit.
  EXPECT_TRUE(InPolytope(Matroid(UniformSpec{40, 20}), FracPoint(40, 0.5)));
}

// A random point inside P(M): random direction scaled to the boundary.
FracPoint RandomFeasiblePoint(const Matroid& matroid, Rng& rng) {
  const int m = matroid.ground_size();
  FracPoint x(m);
  for (int e = 0; e < m; ++e) {
    const bool loop = testing::Rank(matroid.spec(), 1u << e) == 0;
    x[e] = loop || rng.Bernoulli(0.3) ? 0.0 : rng.Uniform01();
  }
  while (testing::MaxExcess(matroid.spec(), x) > 1e-12) {
    for (double& v : x) v *= 0.9;
  }
  if (rng.Bernoulli(0.5)) {
    // Push one coordinate to its headroom to create tight sets.
    const int e = rng.UniformRange(0, m - 1);
    x[e] = testing::Headroom(matroid.spec(), x, e);
  }
  return x;
}

TEST(PolytopeTest, AgreesWithExhaustiveOracles) {
  Rng rng(17);
  for (int rep = 0; rep < 150; ++rep) {
    const int m = rng.UniformRange(1, 9);
    const Matroid matroid = RandomMatroid(
        static_cast<MatroidFamily>(rng.UniformInt(m <= 8 ? 4 : 3)), m, rng);
    const FracPoint x = RandomFeasiblePoint(matroid, rng);
    ASSERT_TRUE(InPolytope(matroid, x));
    ASSERT_NEAR(MostViolatedSet(matroid, x).excess, 0.0, 1e-9);
    const std::uint32_t tight = testing::TightUnion(matroid.spec(), x, 1e-9);
    ASSERT_EQ(MaximalTightSet(matroid, x).ToMask(), tight);
    for (int e = 0; e < m; ++e) {
      const double head = Headroom(matroid, x, e);
      ASSERT_NEAR(head, testing::Headroom(matroid.spec(), x, e), 1e-9);
      ASSERT_DOUBLE_EQ(MinSlack(matroid, x, e), head - x[e]);
      FracPoint raised = x;
      raised[e] = head;
      ASSERT_TRUE(InPolytope(matroid, raised));
      raised[e] = head + 10 * kEpsilon;
      ASSERT_FALSE(InPolytope(matroid, raised));
    }
  }
}

TEST(PolytopeTest, ClosedFormsMatchExhaustive) {
  Rng rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = rng.UniformRange(1, 12);
    const Matroid matroid = RandomMatroid(
        rng.Bernoulli(0.5) ? MatroidFamily::kUniform : MatroidFamily::kPartition,
        m, rng);
    FracPoint x(m);
    for (double& v : x) v = rng.Uniform01() * 0.6;
    const bool inside = InPolytope(matroid, x, Evaluation::kExhaustive);
    ASSERT_EQ(InPolytope(matroid, x), inside);
    ASSERT_NEAR(MostViolatedSet(matroid, x).excess,
                MostViolatedSet(matroid, x, Evaluation::kExhaustive).excess,
                1e-9);
    if (!inside) continue;
    ASSERT_EQ(MaximalTightSet(matroid, x),
              MaximalTightSet(matroid, x, Evaluation::kExhaustive));
    for (int e = 0; e < m; ++e) {
      ASSERT_NEAR(Headroom(matroid, x, e),
                  Headroom(matroid, x, e, Evaluation::kExhaustive), 1e-9);
    }
  }
}

TEST(PolytopeTest, TightSetsUncross) {
  Rng rng(29);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = rng.UniformRange(2, 8);
    const Matroid matroid = RandomMatroid(
        static_cast<MatroidFamily>(rng.UniformInt(4)), m, rng);
    const FracPoint x = RandomFeasiblePoint(matroid, rng);
    const std::vector<int> rank = testing::RankTable(matroid.spec());
    std::vector<std::uint32_t> tight;
    for (std::uint32_t s = 1; s < rank.size(); ++s) {
      if (std::abs(testing::Sum(x, s) - rank[s]) <= kEpsilon) tight.push_back(s);
    }
    for (std::uint32_t a : tight) {
      for (std::uint32_t b : tight) {
        ASSERT_LE(std::abs(testing::Sum(x, a | b) - rank[a | b]), 2 * kEpsilon);
        ASSERT_LE(std::abs(testing::Sum(x, a & b) - rank[a & b]), 2 * kEpsilon);
      }
    }
  }
}

}  // namespace
}  // namespace onlinerank
