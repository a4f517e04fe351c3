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

#ifndef ONLINERANK_ROUNDING_H_
#define ONLINERANK_ROUNDING_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "json.hpp"
#include "onlinerank/algg.h"
#include "onlinerank/guess.h"
#include "onlinerank/instance.h"
#include "onlinerank/rng.h"

namespace onlinerank {

// One coin per fractional update, tossed with probability delta_x / 4.
// `accepted` is set when the coin came up heads, e was not yet in F and
// F + e is independent in the constraint matroid.
struct CoinRecord {
  int round = 0;
  int element = 0;
  double delta_x = 0.0;
  double probability = 0.0;
  bool heads = false;
  bool accepted = false;
};

struct CoupledTrace {
  double alpha = 1.0;
  double fractional_profit = 0.0;
  // F after each round; f_rounds[i] is F_i.
  std::vector<ElementSet> f_rounds;
  std::vector<CoinRecord> coins;
  // f_i(F_i) for each round.
  std::vector<double> profits;
  double total_profit = 0.0;

  ElementSet FinalSet() const {
    return f_rounds.empty() ? ElementSet() : f_rounds.back();
  }
};

struct RoundingOptions {
  OrderPolicy order;
  // Test hook: every coin lands heads. Coins are still drawn so the stream
  // stays aligned with normal runs.
  bool force_heads = false;
};

// Replays a finished fractional run, tossing one coin per update in trace
// order. The coin is drawn even when F + e is dependent; that outcome is
// discarded.
CoupledTrace RoundFractionalRun(const Instance& instance,
                                const AlgGState& fractional, Rng& coins,
                                bool force_heads = false);

// Fractional run for `alpha` followed by the coupled rounding.
CoupledTrace RunCoupled(const Instance& instance, double alpha, Rng& coins,
                        const RoundingOptions& options = {});

// sum_i f_i(F_i) recomputed from the recorded sets.
double IntegralProfit(const Instance& instance, const CoupledTrace& trace);

// Memoizes fractional runs per alpha for one instance; the fractional run is
// deterministic so trials sharing an alpha can reuse it. Thread-safe.
class FractionalRunCache {
 public:
  FractionalRunCache(const Instance& instance, OrderPolicy order)
      : instance_(instance), order_(order) {}

  std::shared_ptr<const AlgGState> Get(double alpha);

 private:
  const Instance& instance_;
  OrderPolicy order_;
  std::mutex mu_;
  std::map<double, std::shared_ptr<const AlgGState>> runs_;
};

// Samples alpha from the scheme on stream (seed, "alpha"), then rounds with
// coins from stream (seed, "coins", alpha).
CoupledTrace FullPipeline(const Instance& instance, const GuessScheme& scheme,
                          std::uint64_t seed,
                          const RoundingOptions& options = {},
                          FractionalRunCache* cache = nullptr);

// {"alpha":..., "fractional_profit":..., "total_profit":..., "rounds":
// [{"F":[...], "profit":...}, ...], "coins": [...]}
nlohmann::json CoupledTraceToJson(const CoupledTrace& trace);

}  // namespace onlinerank

#endif  // ONLINERANK_ROUNDING_H_
