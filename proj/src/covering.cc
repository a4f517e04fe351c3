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
#include <numeric>
#include <string>

#include "onlinerank/errors.h"

namespace onlinerank {

namespace {

void CheckOrdering(const std::vector<int>& ordering, int m) {
  std::vector<bool> seen(m, false);
  if (static_cast<int>(ordering.size()) != m) {
    throw InvalidInputError("ordering must list every element once");
  }
  for (int e : ordering) {
    if (e < 0 || e >= m || seen[e]) {
      throw InvalidInputError("ordering must list every element once");
    }
    seen[e] = true;
  }
}

}  // namespace

ElementSet SampleSet(const FracPoint& z, Rng& rng) {
  ElementSet d;
  for (std::size_t e = 0; e < z.size(); ++e) {
    if (rng.Bernoulli(z[e])) d.Insert(static_cast<int>(e));
  }
  return d;
}

CoverResult FirstFitCover(const Matroid& matroid, const ElementSet& sampled) {
  CoverResult result;
  result.sampled = sampled;
  sampled.ForEach([&](int e) {
    if (matroid.IsLoop(e)) {
      throw InvalidInputError("element " + std::to_string(e) +
                              " is a loop and fits in no independent set");
    }
    for (ElementSet& part : result.parts) {
      part.Insert(e);
      if (matroid.IsIndependent(part)) return;
      part.Erase(e);
    }
    result.parts.push_back(ElementSet{e});
  });
  result.rounds = static_cast<int>(result.parts.size());
  return result;
}

std::vector<int> AscendingOrder(int m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> ShuffledOrder(int m, Rng& rng) {
  std::vector<int> order = AscendingOrder(m);
  rng.Shuffle(order);
  return order;
}

std::vector<int> LastElementOrder(const Matroid& matroid, const FracPoint& z,
                                  Rng& rng, int samples) {
  const int m = matroid.ground_size();
  if (static_cast<int>(z.size()) != m) {
    throw InvalidInputError("point length does not match matroid");
  }
  if (samples < 1) throw InvalidInputError("samples must be >= 1");
  FracPoint doubled(z);
  for (double& v : doubled) v *= 2.0;
  if (!InPolytope(matroid, doubled)) {
    throw InvalidInputError(
        "last-element ordering requires z(S) <= r(S)/2 for every S");
  }

  std::vector<int> remaining = AscendingOrder(m);
  std::vector<int> reversed;
  while (!remaining.empty()) {
    std::vector<int> tossed(m, 0);
    for (int t = 0; t < samples; ++t) {
      ElementSet d;
      for (int e : remaining) {
        if (rng.Bernoulli(z[e])) d.Insert(e);
      }
      for (int e : remaining) {
        ElementSet without = d;
        without.Erase(e);
        ElementSet with = without;
        with.Insert(e);
        if (matroid.Rank(with) > matroid.Rank(without)) ++tossed[e];
      }
    }
    int best = remaining.front();
    for (int e : remaining) {
      if (tossed[e] > tossed[best]) best = e;
    }
    const double estimate = static_cast<double>(tossed[best]) / samples;
    const double stderr_estimate =
        std::sqrt(estimate * (1.0 - estimate) / samples);
    if (estimate < 0.5 - 2.0 * stderr_estimate) {
      throw EstimationError(
          "no element reaches toss probability 1/2 (best element " +
              std::to_string(best) + ", estimate " + std::to_string(estimate) +
              "); increase samples or check z(S) <= r(S)/2",
          best, estimate);
    }
    reversed.push_back(best);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  return {reversed.rbegin(), reversed.rend()};
}

CoverResult SequentialRoundsCover(const Matroid& matroid, const FracPoint& z,
                                  Rng& rng, const std::vector<int>& ordering) {
  const int m = matroid.ground_size();
  if (static_cast<int>(z.size()) != m) {
    throw InvalidInputError("point length does not match matroid");
  }
  CheckOrdering(ordering, m);

  std::vector<int> survivors;
  for (int e : ordering) {
    if (!matroid.IsLoop(e)) {
      survivors.push_back(e);
    } else if (z[e] > 0.0) {
      throw InvalidInputError("loop element " + std::to_string(e) +
                              " has positive probability");
    }
  }
  CoverResult result;
  // Each iteration removes at least the first survivor, so m iterations
  // always suffice; the loop bound enforces it.
  for (int iteration = 0; iteration < std::max(m, 1); ++iteration) {
    if (iteration > 0 && survivors.empty()) break;
    ElementSet part;
    std::vector<int> waiting;
    for (int e : survivors) {
      ElementSet grown = part;
      grown.Insert(e);
      if (matroid.IsIndependent(grown)) {
        if (rng.Bernoulli(z[e])) part = std::move(grown);
      } else {
        waiting.push_back(e);
      }
    }
    survivors = std::move(waiting);
    result.sampled |= part;
    result.parts.push_back(std::move(part));
  }
  result.rounds = static_cast<int>(result.parts.size());
  return result;
}

}  // namespace onlinerank
