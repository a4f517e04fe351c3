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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "onlinerank/errors.h"

namespace onlinerank {

namespace {

// Smallest positive singleton value of arrival i, or +inf.
double ArrivalFloor(const Instance& instance, int i) {
  double floor = std::numeric_limits<double>::infinity();
  for (int e = 0; e < instance.m(); ++e) {
    const double v = instance.SingletonValue(i, e);
    if (v > 0.0) floor = std::min(floor, v);
  }
  return floor;
}

Arrival BucketArrival(const Arrival& a, int j, double f_min) {
  ElementSet removed;
  for (int e = 0; e < static_cast<int>(a.weights.size()); ++e) {
    if (!(f_min > 0.0) || !std::isfinite(f_min) ||
        BucketIndex(a.weights[e], f_min) != j) {
      removed.Insert(e);
    }
  }
  return Arrival{a.matroid.DeleteElements(removed),
                 WeightVector(a.weights.size(), 1.0)};
}

}  // namespace

WeightStats ComputeWeightStats(const Instance& instance) {
  WeightStats stats;
  stats.f_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < instance.n(); ++i) {
    for (int e = 0; e < instance.m(); ++e) {
      const double v = instance.SingletonValue(i, e);
      if (v <= 0.0) continue;
      stats.f_min = std::min(stats.f_min, v);
      stats.f_max = std::max(stats.f_max, v);
    }
  }
  if (!(stats.f_max > 0.0)) {
    throw DegenerateInstanceError("no arrival has a positive singleton value");
  }
  stats.f_ratio = 2.0 * stats.f_max / stats.f_min;
  int ceil_log = static_cast<int>(std::ceil(std::log2(stats.f_ratio)));
  // Guard the ceiling against log2 rounding on exact powers of two.
  while (std::ldexp(1.0, ceil_log - 1) >= stats.f_ratio) --ceil_log;
  while (std::ldexp(1.0, ceil_log) < stats.f_ratio) ++ceil_log;
  stats.num_buckets = ceil_log + 1;
  return stats;
}

int BucketIndex(double w, double f_min) {
  if (!(w >= f_min) || !(f_min > 0.0)) return -1;
  int j = static_cast<int>(std::floor(std::log2(w / f_min)));
  while (j > 0 && std::ldexp(f_min, j) > w) --j;
  while (std::ldexp(f_min, j + 1) <= w) ++j;
  return j;
}

Instance Bucketize(const Instance& instance, int j) {
  const WeightStats stats = ComputeWeightStats(instance);
  if (j < 0 || j >= stats.num_buckets) {
    throw InvalidInputError("bucket " + std::to_string(j) + " outside [0, " +
                            std::to_string(stats.num_buckets) + ")");
  }
  std::vector<Arrival> arrivals;
  for (const Arrival& a : instance.arrivals()) {
    arrivals.push_back(BucketArrival(a, j, stats.f_min));
  }
  return Instance(instance.constraint(), std::move(arrivals));
}

double BucketBoundSlack(const Instance& instance, const ElementSet& s) {
  const WeightStats stats = ComputeWeightStats(instance);
  double slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < instance.n(); ++i) {
    const Arrival& a = instance.arrival(i);
    double bound = 0.0;
    for (int j = 0; j < stats.num_buckets; ++j) {
      ElementSet in_bucket;
      s.ForEach([&](int e) {
        if (BucketIndex(a.weights[e], stats.f_min) == j) in_bucket.Insert(e);
      });
      bound += std::ldexp(stats.f_min, j) * a.matroid.Rank(in_bucket);
    }
    slack = std::min(slack, 2.0 * bound - instance.ArrivalValue(i, s));
  }
  return instance.n() == 0 ? 0.0 : slack;
}

bool VerifyBucketBound(const Instance& instance, const ElementSet& s) {
  return BucketBoundSlack(instance, s) >= -kEpsilon;
}

WeightedRunResult RunWeighted(const Instance& instance,
                              const GuessScheme& scheme, bool ratio_known,
                              std::uint64_t seed,
                              const WeightedRunOptions& options) {
  WeightedRunResult result;
  Rng bucket_rng = Rng::ForStream(seed, "bucket");
  std::vector<double> floors(instance.n());
  std::vector<Arrival> arrivals;

  if (ratio_known) {
    const WeightStats stats = ComputeWeightStats(instance);
    result.bucket = options.forced_bucket.value_or(
        static_cast<int>(bucket_rng.UniformInt(stats.num_buckets)));
    if (result.bucket < 0 || result.bucket >= stats.num_buckets) {
      throw InvalidInputError("forced bucket out of range");
    }
    std::fill(floors.begin(), floors.end(), stats.f_min);
  } else {
    result.bucket = options.forced_bucket.value_or(
        SampleHeavyTailIndex(1.0, 64, bucket_rng) - 1);
    if (result.bucket < 0) throw InvalidInputError("bucket must be >= 0");
    double running = std::numeric_limits<double>::infinity();
    double first_defined = 0.0;
    for (int i = 0; i < instance.n(); ++i) {
      running = std::min(running, ArrivalFloor(instance, i));
      floors[i] = running;
      if (std::isfinite(running)) {
        if (first_defined == 0.0) first_defined = running;
        if (running != first_defined) result.f_min_changed = true;
      }
    }
  }
  for (int i = 0; i < instance.n(); ++i) {
    arrivals.push_back(
        BucketArrival(instance.arrival(i), result.bucket, floors[i]));
  }
  const Instance bucketed(instance.constraint(), std::move(arrivals));

  result.trace = FullPipeline(bucketed, scheme, seed, options.rounding);
  for (int i = 0; i < instance.n(); ++i) {
    const double scale =
        std::isfinite(floors[i]) ? std::ldexp(floors[i], result.bucket) : 0.0;
    result.scaled_profit += scale * result.trace.profits[i];
    result.exact_profit += instance.ArrivalValue(i, result.trace.f_rounds[i]);
  }
  result.scale = instance.n() > 0 && std::isfinite(floors.back())
                     ? std::ldexp(floors.back(), result.bucket)
                     : 0.0;
  return result;
}

}  // namespace onlinerank
