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

#include "onlinerank/covering.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "boost/math/distributions/chi_squared.hpp"
#include "gtest/gtest.h"
#include "onlinerank/errors.h"
#include "onlinerank/generate.h"
#include "testing/oracles.h"

namespace onlinerank {
namespace {

Matroid Triangle() { return Matroid(GraphicSpec{3, {{0, 1}, {1, 2}, {2, 0}}}); }

void ExpectValidCover(const Matroid& matroid, const CoverResult& cover) {
  ElementSet seen;
  for (const ElementSet& part : cover.parts) {
    EXPECT_TRUE(matroid.IsIndependent(part));
    EXPECT_TRUE((seen & part).Empty());
    seen |= part;
  }
  EXPECT_EQ(seen, cover.sampled);
  EXPECT_EQ(cover.rounds, static_cast<int>(cover.parts.size()));
}

struct ChiSquare {
  double stat = 0.0;
  int dof = 0;
};

double PValue(const ChiSquare& c) {
  const boost::math::chi_squared dist(c.dof);
  return boost::math::cdf(boost::math::complement(dist, c.stat));
}

// Goodness of fit of the sampled union against independent coins.
ChiSquare UnionChiSquare(const Matroid& matroid, const FracPoint& z,
                            const std::vector<int>& ordering, int runs,
                            Rng& rng) {
  const int m = matroid.ground_size();
  std::vector<int> counts(1u << m, 0);
  for (int t = 0; t < runs; ++t) {
    const CoverResult cover = SequentialRoundsCover(matroid, z, rng, ordering);
    ++counts[cover.sampled.ToMask()];
  }
  // Outcomes expected fewer than 5 times share one pooled cell.
  double stat = 0.0;
  int cells = 0;
  double pooled_expected = 0.0;
  double pooled_count = 0.0;
  for (std::uint32_t s = 0; s < counts.size(); ++s) {
    const double expected = runs * testing::ProductProbability(z, s);
    if (expected == 0.0) {
      EXPECT_EQ(counts[s], 0);
    } else if (expected < 5.0) {
      pooled_expected += expected;
      pooled_count += counts[s];
    } else {
      stat += (counts[s] - expected) * (counts[s] - expected) / expected;
      ++cells;
    }
  }
  if (pooled_expected > 0.0) {
    stat += (pooled_count - pooled_expected) * (pooled_count - pooled_expected) /
            pooled_expected;
    ++cells;
  }
  return {stat, std::max(cells - 1, 0)};
}

TEST(CoveringTest, SampleSetExtremesAndMean) {
  Rng rng(1);
  EXPECT_TRUE(SampleSet(FracPoint(5, 0.0), rng).Empty());
  EXPECT_EQ(SampleSet(FracPoint(5, 1.0), rng), ElementSet::Range(5));
  const int draws = 10000;
  double total = 0.0;
  for (int t = 0; t < draws; ++t) total += SampleSet(FracPoint(10, 0.5), rng).Size();
  // Binomial(10, 1/2): mean 5, variance 2.5.
  EXPECT_NEAR(total / draws, 5.0, 3 * std::sqrt(2.5 / draws));
}

TEST(CoveringTest, FirstFitExamples) {
  const Matroid u(UniformSpec{4, 2});
  EXPECT_EQ(FirstFitCover(u, {0, 3}).rounds, 1);
  EXPECT_EQ(FirstFitCover(Matroid(UniformSpec{4, 1}), ElementSet::Range(4)).rounds,
            4);
  const CoverResult tri = FirstFitCover(Triangle(), ElementSet::Range(3));
  EXPECT_EQ(tri.rounds, 2);
  ExpectValidCover(Triangle(), tri);
  EXPECT_EQ(FirstFitCover(u, {}).rounds, 0);
  EXPECT_THROW(FirstFitCover(Matroid(ExplicitSpec{3, {{1}}}), {0, 1}),
               InvalidInputError);
}

TEST(CoveringTest, FirstFitEnvelope) {
  Rng rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = rng.UniformRange(1, 10);
    const Matroid matroid = RandomMatroid(
        static_cast<MatroidFamily>(rng.UniformInt(4)), m, rng);
    ElementSet d;
    for (int e = 0; e < m; ++e) {
      if (!matroid.IsLoop(e) && rng.Bernoulli(0.6)) d.Insert(e);
    }
    const CoverResult cover = FirstFitCover(matroid, d);
    ExpectValidCover(matroid, cover);
    const int full_rank = matroid.Rank(matroid.GroundSet());
    if (!d.Empty()) {
      ASSERT_GE(cover.rounds, (d.Size() + full_rank - 1) / full_rank);
    }
    ASSERT_LE(cover.rounds, d.Size());
  }
}

TEST(CoveringTest, SequentialRoundsZeroPoint) {
  Rng rng(3);
  const CoverResult cover =
      SequentialRoundsCover(Triangle(), FracPoint(3, 0.0), rng, AscendingOrder(3));
  EXPECT_EQ(cover.rounds, 1);
  EXPECT_TRUE(cover.sampled.Empty());
}

TEST(CoveringTest, SequentialRoundsFreeMatroid) {
  Rng rng(4);
  const Matroid free(UniformSpec{6, 6});
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(SequentialRoundsCover(free, FracPoint(6, 0.7), rng,
                                    ShuffledOrder(6, rng))
                  .rounds,
              1);
  }
}

TEST(CoveringTest, SequentialRoundsRejectsBadOrdering) {
  Rng rng(5);
  EXPECT_THROW(SequentialRoundsCover(Triangle(), FracPoint(3, 0.1), rng, {0, 1}),
               InvalidInputError);
  EXPECT_THROW(
      SequentialRoundsCover(Triangle(), FracPoint(3, 0.1), rng, {0, 1, 1}),
      InvalidInputError);
}

TEST(CoveringTest, SequentialRoundsUnionMatchesIndependentCoins) {
  Rng rng(6);
  const Matroid u(UniformSpec{4, 2});
  EXPECT_GT(PValue(UnionChiSquare(u, FracPoint(4, 0.5), AscendingOrder(4),
                                  100000, rng)),
            0.01);
}

TEST(CoveringTest, SequentialRoundsStructure) {
  Rng rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = rng.UniformRange(2, 9);
    const Matroid matroid = RandomMatroid(
        static_cast<MatroidFamily>(rng.UniformInt(4)), m, rng);
    FracPoint z(m);
    for (int e = 0; e < m; ++e) z[e] = matroid.IsLoop(e) ? 0.0 : rng.Uniform01();
    const CoverResult cover =
        SequentialRoundsCover(matroid, z, rng, ShuffledOrder(m, rng));
    ExpectValidCover(matroid, cover);
    ASSERT_LE(cover.rounds, m);
  }
}

TEST(CoveringTest, TossProbabilityOracle) {
  // Uniform(4,2), z = 1/4: e is spanned once two others are drawn.
  const Matroid u(UniformSpec{4, 2});
  const double p = testing::TossProbability(u.spec(), FracPoint(4, 0.25),
                                            {0, 1, 2, 3}, 0);
  EXPECT_NEAR(p, testing::BinomialPmf(3, 0, 0.25) + testing::BinomialPmf(3, 1, 0.25),
              1e-12);
  EXPECT_NEAR(p, 0.84375, 1e-12);
}

TEST(CoveringTest, LastElementOrderZeroPoint) {
  Rng rng(8);
  std::vector<int> order =
      LastElementOrder(Triangle(), FracPoint(3, 0.0), rng, 100);
  std::sort(order.begin(), order.end());
  EXPECT_EQ(order, AscendingOrder(3));
}

TEST(CoveringTest, LastElementOrderPutsTightBlockFirst) {
  // Block {0,1,2} (cap 1) sits exactly at half its rank; block {3,4,5}
  // (cap 2) has room. Exact toss probabilities: 25/36 in the tight block,
  // 24/25 outside it.
  const Matroid p(PartitionSpec{6, {{0, 1, 2}, {3, 4, 5}}, {1, 2}});
  const FracPoint z{1.0 / 6, 1.0 / 6, 1.0 / 6, 0.2, 0.2, 0.2};
  EXPECT_NEAR(testing::TossProbability(p.spec(), z, AscendingOrder(6), 0),
              25.0 / 36, 1e-12);
  EXPECT_NEAR(testing::TossProbability(p.spec(), z, AscendingOrder(6), 3),
              24.0 / 25, 1e-12);
  Rng rng(9);
  const std::vector<int> order = LastElementOrder(p, z, rng, 4000);
  std::vector<int> tail(order.begin() + 3, order.end());
  std::sort(tail.begin(), tail.end());
  EXPECT_EQ(tail, (std::vector<int>{3, 4, 5}));
}

TEST(CoveringTest, LastElementOrderRequiresHalfPolytope) {
  Rng rng(10);
  EXPECT_THROW(LastElementOrder(Matroid(UniformSpec{3, 1}), {0.3, 0.3, 0.3},
                                rng, 100),
               InvalidInputError);
}

TEST(CoveringTest, LastPlacedElementsTossWithProbabilityHalf) {
  Rng rng(11);
  ChiSquare pooled;
  for (int rep = 0; rep < 30; ++rep) {
    const int m = rng.UniformRange(2, 6);
    const Matroid matroid = RandomMatroid(
        static_cast<MatroidFamily>(rng.UniformInt(4)), m, rng);
    // Largest uniform point inside half the polytope.
    const std::vector<int> rank = testing::RankTable(matroid.spec());
    FracPoint z(m);
    for (int e = 0; e < m; ++e) z[e] = matroid.IsLoop(e) ? 0.0 : rng.Uniform01();
    double scale = 1.0;
    for (std::uint32_t s = 1; s < rank.size(); ++s) {
      const double sum = testing::Sum(z, s);
      if (sum > 0) scale = std::min(scale, rank[s] / (2 * sum));
    }
    for (double& v : z) v *= scale;
    const std::vector<int> order = LastElementOrder(matroid, z, rng, 4000);
    for (std::size_t len = order.size(); len > 0; --len) {
      const std::vector<int> pool(order.begin(), order.begin() + len);
      ASSERT_GE(testing::TossProbability(matroid.spec(), z, pool,
                                         order[len - 1]),
                0.5 - 1e-9);
    }
    const ChiSquare c = UnionChiSquare(matroid, z, order, 20000, rng);
    pooled.stat += c.stat;
    pooled.dof += c.dof;
  }
  EXPECT_GT(PValue(pooled), 0.01);
}

}  // namespace
}  // namespace onlinerank
