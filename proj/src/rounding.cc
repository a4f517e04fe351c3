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

#include "onlinerank/rounding.h"

#include <bit>

#include "onlinerank/errors.h"

namespace onlinerank {

CoupledTrace RoundFractionalRun(const Instance& instance,
                                const AlgGState& fractional, Rng& coins,
                                bool force_heads) {
  if (fractional.m() != instance.m() || fractional.round() != instance.n()) {
    throw InvalidInputError("fractional run does not belong to instance");
  }
  CoupledTrace trace;
  trace.alpha = fractional.alpha();
  trace.fractional_profit = FractionalProfit(fractional);
  ElementSet f;
  for (int i = 0; i < instance.n(); ++i) {
    for (const UpdateRecord& u : fractional.RoundUpdates(i)) {
      CoinRecord coin;
      coin.round = i;
      coin.element = u.element;
      coin.delta_x = u.delta();
      coin.probability = coin.delta_x / 4.0;
      coin.heads = coins.Bernoulli(coin.probability) || force_heads;
      if (coin.heads && !f.Contains(u.element)) {
        ElementSet grown = f;
        grown.Insert(u.element);
        if (instance.constraint().IsIndependent(grown)) {
          f = std::move(grown);
          coin.accepted = true;
        }
      }
      trace.coins.push_back(coin);
    }
    trace.f_rounds.push_back(f);
    const double profit = instance.ArrivalValue(i, f);
    trace.profits.push_back(profit);
    trace.total_profit += profit;
  }
  return trace;
}

CoupledTrace RunCoupled(const Instance& instance, double alpha, Rng& coins,
                        const RoundingOptions& options) {
  const AlgGState fractional = RunAlgG(instance, alpha, options.order);
  return RoundFractionalRun(instance, fractional, coins, options.force_heads);
}

double IntegralProfit(const Instance& instance, const CoupledTrace& trace) {
  double total = 0.0;
  for (std::size_t i = 0; i < trace.f_rounds.size(); ++i) {
    total += instance.ArrivalValue(static_cast<int>(i), trace.f_rounds[i]);
  }
  return total;
}

std::shared_ptr<const AlgGState> FractionalRunCache::Get(double alpha) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = runs_.find(alpha);
    if (it != runs_.end()) return it->second;
  }
  auto run = std::make_shared<const AlgGState>(
      RunAlgG(instance_, alpha, order_));
  std::lock_guard<std::mutex> lock(mu_);
  return runs_.emplace(alpha, std::move(run)).first->second;
}

CoupledTrace FullPipeline(const Instance& instance, const GuessScheme& scheme,
                          std::uint64_t seed, const RoundingOptions& options,
                          FractionalRunCache* cache) {
  Rng alpha_rng = Rng::ForStream(seed, "alpha");
  const double alpha = SampleAlpha(scheme, alpha_rng);
  Rng coins = Rng::ForStream(seed, "coins", std::bit_cast<std::uint64_t>(alpha));
  if (cache != nullptr) {
    return RoundFractionalRun(instance, *cache->Get(alpha), coins,
                              options.force_heads);
  }
  return RunCoupled(instance, alpha, coins, options);
}

nlohmann::json CoupledTraceToJson(const CoupledTrace& trace) {
  nlohmann::json rounds = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.f_rounds.size(); ++i) {
    rounds.push_back({{"F", trace.f_rounds[i].Elements()},
                      {"profit", trace.profits[i]}});
  }
  nlohmann::json coins = nlohmann::json::array();
  for (const CoinRecord& c : trace.coins) {
    coins.push_back({{"round", c.round},
                     {"element", c.element},
                     {"delta_x", c.delta_x},
                     {"probability", c.probability},
                     {"heads", c.heads},
                     {"accepted", c.accepted}});
  }
  return {{"alpha", trace.alpha},
          {"fractional_profit", trace.fractional_profit},
          {"total_profit", trace.total_profit},
          {"rounds", rounds},
          {"coins", coins}};
}

}  // namespace onlinerank
