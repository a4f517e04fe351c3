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

#ifndef ONLINERANK_WEIGHTED_H_
#define ONLINERANK_WEIGHTED_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "onlinerank/guess.h"
#include "onlinerank/instance.h"
#include "onlinerank/rounding.h"

namespace onlinerank {

// Singleton-value statistics. f_i({e}) is w_{i,e} when {e} is independent in
// N_i and 0 otherwise.
struct WeightStats {
  double f_min = 0.0;  // smallest positive singleton value
  double f_max = 0.0;
  double f_ratio = 0.0;  // 2 * f_max / f_min
  int num_buckets = 0;   // ceil(log2 f_ratio) + 1
};

// Throws DegenerateInstanceError when no singleton value is positive.
WeightStats ComputeWeightStats(const Instance& instance);

// The j with 2^j f_min <= w < 2^(j+1) f_min, or -1 when w < f_min.
int BucketIndex(double w, double f_min);

// Unweighted instance whose arrival i keeps only the elements with weight in
// bucket j; the others are deleted from N_i (they become loops).
// Throws InvalidInputError unless 0 <= j < num_buckets.
Instance Bucketize(const Instance& instance, int j);

// min over arrivals of 2 * sum_j 2^j f_min f_ij(S) - f_i(S); nonnegative
// exactly when the bucket decomposition upper-bounds every f_i(S).
double BucketBoundSlack(const Instance& instance, const ElementSet& s);
bool VerifyBucketBound(const Instance& instance, const ElementSet& s);

struct WeightedRunOptions {
  RoundingOptions rounding;
  // Test hook: skip the bucket guess.
  std::optional<int> forced_bucket;
};

struct WeightedRunResult {
  int bucket = 0;
  // 2^j * f_min, with the final f_min when it is tracked online.
  double scale = 0.0;
  CoupledTrace trace;
  // sum_i 2^j f_min^(i) * f_ij(F_i): every counted element has weight at
  // least the scale, so this never exceeds exact_profit.
  double scaled_profit = 0.0;
  // sum_i f_i(F_i) with the real weights.
  double exact_profit = 0.0;
  // Unknown-ratio runs only: the running f_min decreased mid-run, so early
  // arrivals were bucketed against a larger floor.
  bool f_min_changed = false;
};

// ratio_known: j uniform over {0, ..., num_buckets - 1} with f_min from the
// whole instance. Otherwise j = i - 1 with i from the heavy-tailed guess
// (epsilon = 1, i_max = 64) and arrival i bucketed against the smallest
// positive singleton value seen up to and including arrival i. The bucket
// instance then goes through FullPipeline with `scheme`.
WeightedRunResult RunWeighted(const Instance& instance,
                              const GuessScheme& scheme, bool ratio_known,
                              std::uint64_t seed,
                              const WeightedRunOptions& options = {});

}  // namespace onlinerank

#endif  // ONLINERANK_WEIGHTED_H_
