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

#include "onlinerank/weighted.h"

#include <cmath>

#include "gtest/gtest.h"
#include "onlinerank/errors.h"
#include "onlinerank/generate.h"
#include "onlinerank/rng.h"
#include "testing/oracles.h"

namespace onlinerank {
namespace {

Instance TwoClassInstance() {
  // Weights 1 and 3 over a partition-constrained ground set of 4.
  return Instance(Matroid(UniformSpec{4, 3}),
                  {Arrival{Matroid(UniformSpec{4, 2}), {1, 3, 1, 3}},
                   Arrival{Matroid(PartitionSpec{4, {{0, 1}, {2, 3}}, {1, 1}}),
                           {3, 1, 3, 1}}});
}

TEST(WeightedTest, StatsExamples) {
  const Instance unit = Instance::Unweighted(Matroid(UniformSpec{3, 2}),
                                             {Matroid(UniformSpec{3, 1})});
  const WeightStats s = ComputeWeightStats(unit);
  EXPECT_DOUBLE_EQ(s.f_min, 1.0);
  EXPECT_DOUBLE_EQ(s.f_max, 1.0);
  EXPECT_DOUBLE_EQ(s.f_ratio, 2.0);
  EXPECT_EQ(s.num_buckets, 2);

  const Instance wide(Matroid(UniformSpec{2, 2}),
                      {Arrival{Matroid(UniformSpec{2, 2}), {1, 8}}});
  const WeightStats w = ComputeWeightStats(wide);
  EXPECT_DOUBLE_EQ(w.f_ratio, 16.0);
  EXPECT_EQ(w.num_buckets, 5);
}

TEST(WeightedTest, LoopsAreExcludedFromStats) {
  const Instance instance(Matroid(UniformSpec{3, 3}),
                          {Arrival{Matroid(ExplicitSpec{3, {{2}}}), {2, 4, 0.5}}});
  EXPECT_DOUBLE_EQ(instance.SingletonValue(0, 2), 0.0);
  const WeightStats s = ComputeWeightStats(instance);
  EXPECT_DOUBLE_EQ(s.f_min, 2.0);
  EXPECT_DOUBLE_EQ(s.f_max, 4.0);
}

TEST(WeightedTest, AllZeroWeightsAreDegenerate) {
  const Instance instance(Matroid(UniformSpec{2, 2}),
                          {Arrival{Matroid(UniformSpec{2, 2}), {0, 0}}});
  EXPECT_THROW(ComputeWeightStats(instance), DegenerateInstanceError);
}

TEST(WeightedTest, BucketIndexBoundaries) {
  EXPECT_EQ(BucketIndex(1, 1), 0);
  EXPECT_EQ(BucketIndex(1.99, 1), 0);
  EXPECT_EQ(BucketIndex(2, 1), 1);
  EXPECT_EQ(BucketIndex(3, 1), 1);
  EXPECT_EQ(BucketIndex(4, 1), 2);
  EXPECT_EQ(BucketIndex(0.5, 1), -1);
  EXPECT_EQ(BucketIndex(0, 1), -1);
}

TEST(WeightedTest, BucketizeKeepsOneClass) {
  const Instance instance = TwoClassInstance();
  const Instance low = Bucketize(instance, 0);
  const Instance high = Bucketize(instance, 1);
  EXPECT_TRUE(low.IsUnweighted());
  // f_ratio = 6, so buckets 0..3 exist.
  EXPECT_EQ(ComputeWeightStats(instance).num_buckets, 4);
  EXPECT_NO_THROW(Bucketize(instance, 3));
  EXPECT_THROW(Bucketize(instance, 4), InvalidInputError);
  EXPECT_THROW(Bucketize(instance, -1), InvalidInputError);
  for (int i = 0; i < instance.n(); ++i) {
    std::uint32_t low_mask = 0;
    std::uint32_t high_mask = 0;
    for (int e = 0; e < 4; ++e) {
      (instance.arrival(i).weights[e] == 1 ? low_mask : high_mask) |= 1u << e;
    }
    for (std::uint32_t s = 0; s < 16; ++s) {
      const ElementSet set = ElementSet::FromMask(s);
      const MatroidSpec& spec = instance.arrival(i).matroid.spec();
      EXPECT_EQ(low.ArrivalValue(i, set), testing::Rank(spec, s & low_mask));
      EXPECT_EQ(high.ArrivalValue(i, set), testing::Rank(spec, s & high_mask));
    }
  }
}

TEST(WeightedTest, BucketizeSingleClassIsUnchanged) {
  Rng rng(1);
  const Instance instance = RandomMixedInstance(6, 4, rng);
  const Instance same = Bucketize(instance, 0);
  for (int i = 0; i < instance.n(); ++i) {
    for (std::uint32_t s = 0; s < 64; ++s) {
      const ElementSet set = ElementSet::FromMask(s);
      ASSERT_EQ(same.ArrivalValue(i, set), instance.ArrivalValue(i, set));
    }
  }
}

TEST(WeightedTest, BucketBoundAgainstOracle) {
  Rng rng(2);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = rng.UniformRange(2, 8);
    const Instance instance =
        RandomMixedInstance(m, rng.UniformRange(1, 6), rng, true);
    EXPECT_TRUE(VerifyBucketBound(instance, {}));
    const WeightStats stats = ComputeWeightStats(instance);
    for (int probe = 0; probe < 5; ++probe) {
      const std::uint32_t s = static_cast<std::uint32_t>(rng.UniformInt(1u << m));
      for (int i = 0; i < instance.n(); ++i) {
        const Arrival& a = instance.arrival(i);
        double bound = 0.0;
        for (int j = 0; j < stats.num_buckets; ++j) {
          std::uint32_t bucket = 0;
          for (int e = 0; e < m; ++e) {
            const double lo = stats.f_min * std::pow(2.0, j);
            if (a.weights[e] >= lo && a.weights[e] < 2 * lo) bucket |= 1u << e;
          }
          bound += stats.f_min * std::pow(2.0, j) *
                   testing::Rank(a.matroid.spec(), s & bucket);
        }
        ASSERT_LE(testing::WeightedRank(a.matroid.spec(), s, a.weights),
                  2 * bound + 1e-9);
      }
      ASSERT_TRUE(VerifyBucketBound(instance, ElementSet::FromMask(s)));
    }
  }
}

TEST(WeightedTest, EqualWeightsScaleUnweightedProfit) {
  Rng rng(3);
  const Instance base = RandomMixedInstance(6, 5, rng);
  std::vector<Arrival> arrivals;
  for (const Arrival& a : base.arrivals()) {
    arrivals.push_back(Arrival{a.matroid, WeightVector(6, 5.0)});
  }
  const Instance scaled(base.constraint(), arrivals);
  WeightedRunOptions options;
  options.forced_bucket = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightedRunResult run =
        RunWeighted(scaled, KnownN{5}, true, seed, options);
    const CoupledTrace plain = FullPipeline(base, KnownN{5}, seed);
    EXPECT_DOUBLE_EQ(run.scale, 5.0);
    EXPECT_DOUBLE_EQ(run.scaled_profit, 5.0 * plain.total_profit);
    EXPECT_DOUBLE_EQ(run.exact_profit, run.scaled_profit);
  }
}

TEST(WeightedTest, ForcedBucketMatchesBucketizedPipeline) {
  const Instance instance = TwoClassInstance();
  for (int j = 0; j < 2; ++j) {
    WeightedRunOptions options;
    options.forced_bucket = j;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const WeightedRunResult run =
          RunWeighted(instance, KnownN{2}, true, seed, options);
      const CoupledTrace plain =
          FullPipeline(Bucketize(instance, j), KnownN{2}, seed);
      EXPECT_EQ(run.trace.profits, plain.profits);
      EXPECT_DOUBLE_EQ(run.scaled_profit, std::ldexp(1.0, j) * plain.total_profit);
    }
  }
}

TEST(WeightedTest, ScaledProfitNeverExceedsExact) {
  Rng rng(4);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = rng.UniformRange(1, 8);
    const Instance instance =
        RandomMixedInstance(rng.UniformRange(2, 8), n, rng, true);
    for (bool known : {true, false}) {
      const WeightedRunResult run = RunWeighted(
          instance, known ? GuessScheme(KnownN{n}) : GuessScheme(UnknownN{}),
          known, rep, {});
      ASSERT_GE(run.bucket, 0);
      ASSERT_LE(run.scaled_profit, run.exact_profit + 1e-9);
      double exact = 0.0;
      for (int i = 0; i < n; ++i) {
        exact += testing::WeightedRank(
            instance.arrival(i).matroid.spec(),
            static_cast<std::uint32_t>(run.trace.f_rounds[i].ToMask()),
            instance.arrival(i).weights);
      }
      ASSERT_NEAR(run.exact_profit, exact, 1e-9);
    }
  }
}

TEST(WeightedTest, RunningMinimumFlagged) {
  const Instance instance(Matroid(UniformSpec{2, 2}),
                          {Arrival{Matroid(UniformSpec{2, 2}), {4, 4}},
                           Arrival{Matroid(UniformSpec{2, 2}), {1, 4}}});
  WeightedRunOptions options;
  options.forced_bucket = 0;
  const WeightedRunResult run =
      RunWeighted(instance, UnknownN{}, false, 1, options);
  EXPECT_TRUE(run.f_min_changed);
  EXPECT_DOUBLE_EQ(run.scale, 1.0);
  const WeightedRunResult known = RunWeighted(instance, KnownN{2}, true, 1, options);
  EXPECT_FALSE(known.f_min_changed);
}

}  // namespace
}  // namespace onlinerank
