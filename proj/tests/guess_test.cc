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

#include "onlinerank/guess.h"

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "onlinerank/errors.h"
#include "onlinerank/rng.h"

namespace onlinerank {
namespace {

TEST(GuessTest, CeilLog2) {
  EXPECT_EQ(CeilLog2(1), 0);
  EXPECT_EQ(CeilLog2(2), 1);
  EXPECT_EQ(CeilLog2(5), 3);
  EXPECT_EQ(CeilLog2(8), 3);
  EXPECT_EQ(CeilLog2(9), 4);
}

TEST(GuessTest, KnownNSupportIsUniform) {
  Rng rng(1);
  const int draws = 100000;
  std::map<double, int> counts;
  for (int i = 0; i < draws; ++i) ++counts[SampleAlpha(KnownN{8}, rng)];
  ASSERT_EQ(counts.size(), 4u);
  const double sigma = std::sqrt(0.25 * 0.75 / draws);
  for (double alpha : {1.0, 2.0, 4.0, 8.0}) {
    ASSERT_TRUE(counts.count(alpha));
    EXPECT_NEAR(counts[alpha] / double(draws), 0.25, 3 * sigma);
  }
}

TEST(GuessTest, KnownNOfOneAlwaysOne) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(SampleAlpha(KnownN{1}, rng), 1.0);
}

TEST(GuessTest, UnknownNProbabilityOfTwo) {
  double c = 0.0;
  for (int i = 1; i <= 64; ++i) {
    c += 1.0 / (i * std::pow(std::log(1.0 + i), 2.0));
  }
  EXPECT_NEAR(HeavyTailNormalizer(1.0, 64), c, 1e-12);
  const double p2 = 1.0 / (c * std::pow(std::log(2.0), 2.0));
  const auto dist = AlphaDistribution(UnknownN{});
  ASSERT_EQ(dist.size(), 64u);
  EXPECT_EQ(dist[0].first, 2.0);
  EXPECT_NEAR(dist[0].second, p2, 1e-12);
  double total = 0.0;
  for (const auto& [alpha, p] : dist) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);

  Rng rng(3);
  const int draws = 100000;
  int twos = 0;
  for (int i = 0; i < draws; ++i) twos += SampleAlpha(UnknownN{}, rng) == 2.0;
  EXPECT_NEAR(twos / double(draws), p2,
              3 * std::sqrt(p2 * (1 - p2) / draws));
}

TEST(GuessTest, HeavyTailLeftoverGoesToFirstIndex) {
  const std::vector<double> p = HeavyTailProbabilities(1.0, 3);
  double c = 0.0;
  for (int i = 1; i <= 3; ++i) c += 1.0 / (i * std::pow(std::log1p(i), 2.0));
  EXPECT_NEAR(p[2], 1.0 / (3 * std::pow(std::log(4.0), 2.0) * c), 1e-12);
  EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-12);
  EXPECT_THROW(HeavyTailProbabilities(0.0, 3), InvalidInputError);
  EXPECT_THROW(HeavyTailProbabilities(1.0, 0), InvalidInputError);
}

}  // namespace
}  // namespace onlinerank
