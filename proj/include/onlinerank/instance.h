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

#ifndef ONLINERANK_INSTANCE_H_
#define ONLINERANK_INSTANCE_H_

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "onlinerank/matroid.h"

namespace onlinerank {

// One online arrival: the matroid N_i and its per-element weights. Unweighted
// arrivals carry all-ones weights.
struct Arrival {
  Matroid matroid;
  WeightVector weights;
};

// The constraint matroid M plus the ordered arrival sequence.
class Instance {
 public:
  // Throws InvalidInputError when ground sets disagree or weights are invalid.
  Instance(Matroid constraint, std::vector<Arrival> arrivals);

  // All-ones weights on every arrival.
  static Instance Unweighted(Matroid constraint,
                             const std::vector<Matroid>& arrivals);

  int m() const { return constraint_.ground_size(); }
  int n() const { return static_cast<int>(arrivals_.size()); }
  const Matroid& constraint() const { return constraint_; }
  const std::vector<Arrival>& arrivals() const { return arrivals_; }
  const Arrival& arrival(int i) const { return arrivals_[i]; }

  bool IsUnweighted() const;

  // f_i({e}): w_{i,e} when {e} is independent in N_i, else 0.
  double SingletonValue(int i, int e) const;

  // f_i(S) = weighted rank of S in N_i.
  double ArrivalValue(int i, const ElementSet& s) const;
  // sum_i f_i(S).
  double TotalValue(const ElementSet& s) const;

 private:
  Matroid constraint_;
  std::vector<Arrival> arrivals_;
};

nlohmann::json SpecToJson(const MatroidSpec& spec);
// Throws InvalidInputError on unknown kinds or missing fields.
MatroidSpec SpecFromJson(const nlohmann::json& j);

// {"m":..., "constraint": <spec>, "arrivals": [{"matroid": <spec>,
// "weights": [...]}, ...]}; weights are omitted for all-ones arrivals.
nlohmann::json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const nlohmann::json& j);

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

}  // namespace onlinerank

#endif  // ONLINERANK_INSTANCE_H_
