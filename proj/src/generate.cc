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

#include "onlinerank/generate.h"

#include <algorithm>
#include <string>

#include "onlinerank/errors.h"

namespace onlinerank {

namespace {

PartitionSpec RandomPartitionSpec(int m, Rng& rng, int min_cap) {
  const int num_blocks = rng.UniformRange(1, std::max(1, m / 2));
  std::vector<std::vector<int>> blocks(num_blocks);
  for (int e = 0; e < m; ++e) {
    blocks[rng.UniformInt(num_blocks)].push_back(e);
  }
  PartitionSpec spec{m, {}, {}};
  for (auto& b : blocks) {
    if (b.empty()) continue;
    spec.caps.push_back(
        rng.UniformRange(std::min(min_cap, static_cast<int>(b.size())),
                         static_cast<int>(b.size())));
    spec.blocks.push_back(std::move(b));
  }
  return spec;
}

GraphicSpec RandomGraphicSpec(int m, Rng& rng) {
  GraphicSpec spec;
  spec.num_vertices = rng.UniformRange(3, std::max(3, m / 2 + 2));
  for (int e = 0; e < m; ++e) {
    const int u = rng.UniformRange(0, spec.num_vertices - 1);
    int v = rng.UniformRange(0, spec.num_vertices - 2);
    if (v >= u) ++v;
    spec.edges.emplace_back(u, v);
  }
  return spec;
}

WeightVector RandomWeights(int m, int max_exponent, Rng& rng) {
  WeightVector w(m);
  const int top = 1 << max_exponent;
  for (double& v : w) v = rng.UniformRange(1, top);
  return w;
}

}  // namespace

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name) {
  if (name == "random-partition") return GeneratorKind::kRandomPartition;
  if (name == "random-uniform") return GeneratorKind::kRandomUniform;
  if (name == "random-graphic") return GeneratorKind::kRandomGraphic;
  if (name == "max-coverage") return GeneratorKind::kMaxCoverage;
  return std::nullopt;
}

std::string GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomPartition:
      return "random-partition";
    case GeneratorKind::kRandomUniform:
      return "random-uniform";
    case GeneratorKind::kRandomGraphic:
      return "random-graphic";
    case GeneratorKind::kMaxCoverage:
      return "max-coverage";
  }
  return "unknown";
}

Matroid RandomMatroid(MatroidFamily family, int m, Rng& rng) {
  switch (family) {
    case MatroidFamily::kUniform:
      return Matroid(UniformSpec{m, rng.UniformRange(1, std::max(1, m - 1))});
    case MatroidFamily::kPartition:
      return Matroid(RandomPartitionSpec(m, rng, 1));
    case MatroidFamily::kGraphic:
      return Matroid(RandomGraphicSpec(m, rng));
    case MatroidFamily::kExplicit: {
      if (m > 10) {
        throw InvalidInputError("random explicit matroids need m <= 10");
      }
      const Matroid base = rng.Bernoulli(0.5)
                               ? Matroid(RandomGraphicSpec(m, rng))
                               : Matroid(RandomPartitionSpec(m, rng, 1));
      return Matroid(ExplicitSpec{m, Circuits(base)});
    }
  }
  throw InvalidInputError("unknown matroid family");
}

Instance RandomMixedInstance(int m, int n, Rng& rng, bool weighted) {
  const int families = m <= 8 ? 4 : 3;
  auto pick = [&] {
    return static_cast<MatroidFamily>(rng.UniformInt(families));
  };
  Matroid constraint = RandomMatroid(pick(), m, rng);
  std::vector<Arrival> arrivals;
  for (int i = 0; i < n; ++i) {
    Matroid a = RandomMatroid(pick(), m, rng);
    WeightVector w = weighted ? RandomWeights(m, 4, rng) : WeightVector(m, 1.0);
    arrivals.push_back(Arrival{std::move(a), std::move(w)});
  }
  return Instance(std::move(constraint), std::move(arrivals));
}

Instance MaxCoverageInstance(const std::vector<std::vector<int>>& item_sets,
                             int num_sets, int budget) {
  std::vector<Matroid> arrivals;
  for (const std::vector<int>& covering : item_sets) {
    std::vector<bool> in(num_sets, false);
    for (int s : covering) {
      if (s < 0 || s >= num_sets) {
        throw InvalidInputError("set index out of range");
      }
      in[s] = true;
    }
    PartitionSpec spec{num_sets, {}, {}};
    std::vector<int> rest;
    std::vector<int> hit;
    for (int s = 0; s < num_sets; ++s) (in[s] ? hit : rest).push_back(s);
    if (!hit.empty()) {
      spec.blocks.push_back(hit);
      spec.caps.push_back(1);
    }
    if (!rest.empty()) {
      spec.blocks.push_back(rest);
      spec.caps.push_back(0);
    }
    arrivals.emplace_back(spec);
  }
  return Instance::Unweighted(Matroid(UniformSpec{num_sets, budget}),
                              arrivals);
}

Instance Generate(GeneratorKind kind, const GeneratorParams& params,
                  std::uint64_t seed) {
  const int m = params.m;
  const int n = params.n;
  if (m < 2) throw InvalidInputError("generator needs m >= 2");
  if (n < 0) throw InvalidInputError("generator needs n >= 0");
  if (params.max_weight_exponent < 0 || params.max_weight_exponent > 30) {
    throw InvalidInputError("max weight exponent must be in [0, 30]");
  }
  Rng rng = Rng::ForStream(seed, GeneratorKindName(kind));

  if (kind == GeneratorKind::kMaxCoverage) {
    if (!(params.coverage_probability >= 0.0 &&
          params.coverage_probability <= 1.0)) {
      throw InvalidInputError("coverage probability must be in [0, 1]");
    }
    const int budget = params.budget > 0 ? params.budget : std::max(1, m / 4);
    if (budget > m) throw InvalidInputError("budget exceeds number of sets");
    std::vector<std::vector<int>> item_sets(n);
    for (int t = 0; t < n; ++t) {
      for (int s = 0; s < m; ++s) {
        if (rng.Bernoulli(params.coverage_probability)) {
          item_sets[t].push_back(s);
        }
      }
    }
    Instance base = MaxCoverageInstance(item_sets, m, budget);
    if (!params.weighted) return base;
    std::vector<Arrival> arrivals = base.arrivals();
    for (Arrival& a : arrivals) {
      a.weights = WeightVector(m, rng.UniformRange(
                                      1, 1 << params.max_weight_exponent));
    }
    return Instance(base.constraint(), std::move(arrivals));
  }

  MatroidFamily family = MatroidFamily::kPartition;
  if (kind == GeneratorKind::kRandomUniform) family = MatroidFamily::kUniform;
  if (kind == GeneratorKind::kRandomGraphic) family = MatroidFamily::kGraphic;
  Matroid constraint = RandomMatroid(family, m, rng);
  std::vector<Arrival> arrivals;
  for (int i = 0; i < n; ++i) {
    Matroid a = RandomMatroid(family, m, rng);
    WeightVector w = params.weighted
                         ? RandomWeights(m, params.max_weight_exponent, rng)
                         : WeightVector(m, 1.0);
    arrivals.push_back(Arrival{std::move(a), std::move(w)});
  }
  return Instance(std::move(constraint), std::move(arrivals));
}

}  // namespace onlinerank
