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

#ifndef ONLINERANK_GENERATE_H_
#define ONLINERANK_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onlinerank/instance.h"
#include "onlinerank/rng.h"

namespace onlinerank {

enum class GeneratorKind {
  kRandomPartition,
  kRandomUniform,
  kRandomGraphic,
  kMaxCoverage,
};

std::optional<GeneratorKind> ParseGeneratorKind(std::string_view name);
std::string GeneratorKindName(GeneratorKind kind);

struct GeneratorParams {
  int m = 8;
  int n = 8;
  // Random integer weights in [1, 2^max_weight_exponent] per arrival.
  bool weighted = false;
  int max_weight_exponent = 3;
  // max-coverage: probability that a set contains a given item, and the
  // number of sets that may be chosen (0 picks max(1, m / 4)).
  double coverage_probability = 0.3;
  int budget = 0;
};

// Throws InvalidInputError for m < 2, n < 0 or inconsistent parameters.
Instance Generate(GeneratorKind kind, const GeneratorParams& params,
                  std::uint64_t seed);

// Sets over ground set {0..#sets-1}; items 0..num_items-1 arrive in order.
// M = Uniform(#sets, budget); the arrival for item t is a partition matroid
// with one capacity-1 block holding the sets that contain t and a
// capacity-0 block for the rest, so f_t(S) = 1 iff S covers t.
Instance MaxCoverageInstance(const std::vector<std::vector<int>>& item_sets,
                             int num_sets, int budget);

enum class MatroidFamily { kUniform, kPartition, kGraphic, kExplicit };

// Random members of each family over m elements. Explicit matroids are the
// circuit lists of a random graphic or partition matroid and need m <= 10.
Matroid RandomMatroid(MatroidFamily family, int m, Rng& rng);

// Constraint and arrivals drawn from a random family each (explicit only
// when m <= 8). Weighted instances draw integer weights in [1, 16].
Instance RandomMixedInstance(int m, int n, Rng& rng, bool weighted = false);

}  // namespace onlinerank

#endif  // ONLINERANK_GENERATE_H_
