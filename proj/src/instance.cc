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

#include "onlinerank/instance.h"

#include <fstream>
#include <string>
#include <variant>

#include "onlinerank/errors.h"

namespace onlinerank {

using nlohmann::json;

Instance::Instance(Matroid constraint, std::vector<Arrival> arrivals)
    : constraint_(std::move(constraint)), arrivals_(std::move(arrivals)) {
  for (std::size_t i = 0; i < arrivals_.size(); ++i) {
    if (arrivals_[i].matroid.ground_size() != m()) {
      throw InvalidInputError("arrival " + std::to_string(i) +
                              " has ground-set size " +
                              std::to_string(arrivals_[i].matroid.ground_size()) +
                              ", constraint has " + std::to_string(m()));
    }
    ValidateWeights(arrivals_[i].weights, m());
  }
}

Instance Instance::Unweighted(Matroid constraint,
                              const std::vector<Matroid>& arrivals) {
  const int m = constraint.ground_size();
  std::vector<Arrival> out;
  out.reserve(arrivals.size());
  for (const Matroid& a : arrivals) {
    out.push_back(Arrival{a, WeightVector(m, 1.0)});
  }
  return Instance(std::move(constraint), std::move(out));
}

bool Instance::IsUnweighted() const {
  for (const Arrival& a : arrivals_) {
    for (double w : a.weights) {
      if (w != 1.0) return false;
    }
  }
  return true;
}

double Instance::SingletonValue(int i, int e) const {
  const Arrival& a = arrivals_[i];
  return a.matroid.IsLoop(e) ? 0.0 : a.weights[e];
}

double Instance::ArrivalValue(int i, const ElementSet& s) const {
  return arrivals_[i].matroid.WeightedRank(s, arrivals_[i].weights);
}

double Instance::TotalValue(const ElementSet& s) const {
  double total = 0.0;
  for (int i = 0; i < n(); ++i) total += ArrivalValue(i, s);
  return total;
}

json SpecToJson(const MatroidSpec& spec) {
  if (const auto* u = std::get_if<UniformSpec>(&spec)) {
    return {{"kind", "uniform"}, {"m", u->m}, {"k", u->k}};
  }
  if (const auto* p = std::get_if<PartitionSpec>(&spec)) {
    return {{"kind", "partition"},
            {"m", p->m},
            {"blocks", p->blocks},
            {"caps", p->caps}};
  }
  if (const auto* g = std::get_if<GraphicSpec>(&spec)) {
    json edges = json::array();
    for (const auto& [u, v] : g->edges) edges.push_back({u, v});
    return {{"kind", "graphic"},
            {"vertices", g->num_vertices},
            {"edges", edges}};
  }
  const auto& x = std::get<ExplicitSpec>(spec);
  return {{"kind", "explicit"}, {"m", x.m}, {"circuits", x.circuits}};
}

MatroidSpec SpecFromJson(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform") {
      return UniformSpec{j.at("m").get<int>(), j.at("k").get<int>()};
    }
    if (kind == "partition") {
      return PartitionSpec{j.at("m").get<int>(),
                           j.at("blocks").get<std::vector<std::vector<int>>>(),
                           j.at("caps").get<std::vector<int>>()};
    }
    if (kind == "graphic") {
      GraphicSpec g;
      g.num_vertices = j.at("vertices").get<int>();
      for (const json& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) {
          throw InvalidInputError("graphic edge must be a [u, v] pair");
        }
        g.edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
      }
      return g;
    }
    if (kind == "explicit") {
      return ExplicitSpec{
          j.at("m").get<int>(),
          j.at("circuits").get<std::vector<std::vector<int>>>()};
    }
    throw InvalidInputError("unknown matroid kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed matroid spec: ") + e.what());
  }
}

json InstanceToJson(const Instance& instance) {
  json arrivals = json::array();
  for (const Arrival& a : instance.arrivals()) {
    json entry = {{"matroid", SpecToJson(a.matroid.spec())}};
    bool unit = true;
    for (double w : a.weights) unit = unit && w == 1.0;
    if (!unit) entry["weights"] = a.weights;
    arrivals.push_back(std::move(entry));
  }
  return {{"m", instance.m()},
          {"constraint", SpecToJson(instance.constraint().spec())},
          {"arrivals", arrivals}};
}

Instance InstanceFromJson(const json& j) {
  try {
    const int m = j.at("m").get<int>();
    Matroid constraint(SpecFromJson(j.at("constraint")));
    if (constraint.ground_size() != m) {
      throw InvalidInputError("constraint ground-set size differs from m");
    }
    std::vector<Arrival> arrivals;
    for (const json& a : j.at("arrivals")) {
      Matroid matroid(SpecFromJson(a.at("matroid")));
      WeightVector w = a.contains("weights")
                           ? a.at("weights").get<WeightVector>()
                           : WeightVector(m, 1.0);
      arrivals.push_back(Arrival{std::move(matroid), std::move(w)});
    }
    return Instance(std::move(constraint), std::move(arrivals));
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed instance: ") + e.what());
  }
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInputError(path.string() + ": " + e.what());
  }
  return InstanceFromJson(j);
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << InstanceToJson(instance).dump(2) << '\n';
}

}  // namespace onlinerank
