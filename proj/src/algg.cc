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

#include "onlinerank/algg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "onlinerank/errors.h"
#include "onlinerank/rng.h"

namespace onlinerank {

double UpdateFactor(int m, double alpha) {
  return std::exp(kUpdateRate * std::log(static_cast<double>(m)) / alpha);
}

std::vector<int> ProcessingOrder(const OrderPolicy& policy, int m, int round) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  switch (policy.order) {
    case ElementOrder::kAscending:
      break;
    case ElementOrder::kDescending:
      std::reverse(order.begin(), order.end());
      break;
    case ElementOrder::kShuffle: {
      Rng rng = Rng::ForStream(policy.seed, "order", round);
      rng.Shuffle(order);
      break;
    }
  }
  return order;
}

AlgGState::AlgGState(int m, double alpha) : alpha_(alpha), m_(m) {
  if (m < 2) {
    throw InvalidInputError("online algorithm needs m >= 2, got m = " +
                            std::to_string(m));
  }
  if (!(alpha >= 1.0)) {
    throw InvalidInputError("alpha must be >= 1");
  }
  factor_ = UpdateFactor(m, alpha);
  x_.assign(m, 1.0 / (static_cast<double>(m) * m));
}

std::span<const UpdateRecord> AlgGState::RoundUpdates(int round) const {
  const std::size_t begin = round_begin_.at(round);
  const std::size_t end = round + 1 < static_cast<int>(round_begin_.size())
                              ? round_begin_[round + 1]
                              : trace_.size();
  return std::span<const UpdateRecord>(trace_).subspan(begin, end - begin);
}

double AlgGState::Z(int round, int e) const {
  for (const auto& [element, value] : z_.at(round)) {
    if (element == e) return value;
  }
  return 0.0;
}

FracPoint AlgGState::ZVector(int round) const {
  FracPoint z(m_, 0.0);
  for (const auto& [element, value] : z_.at(round)) z[element] = value;
  return z;
}

std::vector<FracPoint> AlgGState::ZMatrix() const {
  std::vector<FracPoint> out;
  out.reserve(z_.size());
  for (int i = 0; i < round(); ++i) out.push_back(ZVector(i));
  return out;
}

void AlgGState::ProcessArrival(const Matroid& constraint,
                               const Matroid& arrival,
                               const OrderPolicy& order) {
  if (constraint.ground_size() != m_ || arrival.ground_size() != m_) {
    throw InvalidInputError("arrival ground-set size does not match state");
  }
  const int i = round();
  round_begin_.push_back(trace_.size());
  z_.emplace_back();
  FracPoint z_round(m_, 0.0);
  for (int e : ProcessingOrder(order, m_, i)) {
    const double headroom = Headroom(constraint, x_, e);
    if (headroom - x_[e] <= kEpsilon) continue;
    if (MinSlack(arrival, z_round, e) <= 0.5 + kEpsilon) continue;
    const double before = x_[e];
    x_[e] = std::min(before * factor_, headroom);
    z_round[e] = x_[e] / 2.0;
    z_.back().emplace_back(e, z_round[e]);
    trace_.push_back(UpdateRecord{i, e, before, x_[e], z_round[e]});
  }
}

AlgGState RunAlgG(const Instance& instance, double alpha,
                  const OrderPolicy& order) {
  if (!instance.IsUnweighted()) {
    throw InvalidInputError(
        "weighted instance: reduce it with the weighted bucketing first");
  }
  AlgGState state(instance.m(), alpha);
  for (const Arrival& a : instance.arrivals()) {
    state.ProcessArrival(instance.constraint(), a.matroid, order);
  }
  return state;
}

double FractionalProfit(const AlgGState& state) {
  double total = 0.0;
  for (const UpdateRecord& u : state.trace()) total += u.z;
  return total;
}

void WriteTraceJsonl(const AlgGState& state, std::ostream& out) {
  for (const UpdateRecord& u : state.trace()) {
    const nlohmann::json line = {{"round", u.round},
                                 {"element", u.element},
                                 {"x_before", u.x_before},
                                 {"x_after", u.x_after},
                                 {"z", u.z}};
    out << line.dump() << '\n';
  }
}

}  // namespace onlinerank
