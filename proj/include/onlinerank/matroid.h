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

#ifndef ONLINERANK_MATROID_H_
#define ONLINERANK_MATROID_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "onlinerank/element_set.h"

namespace onlinerank {

// Absolute tolerance used for every tightness and feasibility comparison.
inline constexpr double kEpsilon = 1e-9;

// Largest ground set for which exhaustive subset enumeration is allowed.
inline constexpr int kMaxEnumerationSize = 16;

struct UniformSpec {
  int m = 0;
  int k = 0;
};

struct PartitionSpec {
  int m = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> caps;
};

// Element i is the edge edges[i]; a self-loop edge is a matroid loop.
struct GraphicSpec {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

struct ExplicitSpec {
  int m = 0;
  std::vector<std::vector<int>> circuits;
};

using MatroidSpec =
    std::variant<UniformSpec, PartitionSpec, GraphicSpec, ExplicitSpec>;

// Per-element nonnegative weights, indexed by element.
using WeightVector = std::vector<double>;

// Throws InvalidInputError unless `w` has length m and no negative entry.
void ValidateWeights(const WeightVector& w, int m);

// Immutable matroid over {0, ..., m-1} built from a validated spec.
//
// For m <= kMaxEnumerationSize the full rank table (one entry per subset) is
// built lazily on first use and shared between copies; subset-enumerating
// callers go through RankOfMask().
class Matroid {
 public:
  // Validates the spec (throws InvalidInputError). Explicit specs are
  // checked against the circuit axioms, which is exponential in the number of
  // circuits and meant for tiny hand-built matroids.
  explicit Matroid(MatroidSpec spec);

  const MatroidSpec& spec() const { return spec_; }
  int ground_size() const { return m_; }
  ElementSet GroundSet() const { return ElementSet::Range(m_); }

  // Uniform and partition matroids admit closed-form polytope queries.
  bool HasClosedForm() const;

  bool IsIndependent(const ElementSet& s) const;
  int Rank(const ElementSet& s) const;
  // Rank by greedy augmentation through IsIndependent(); agrees with Rank()
  // and exists to cross-check the closed forms.
  int RankByAugmentation(const ElementSet& s) const;
  ElementSet Span(const ElementSet& s) const;
  bool IsLoop(int e) const;

  // Value of a max-weight independent subset of `s`.
  double WeightedRank(const ElementSet& s, const WeightVector& w) const;
  // Greedy max-weight independent subset of `s`: descending weight, ties by
  // ascending index. Zero-weight elements are still added when independent.
  ElementSet MaxWeightIndependentSubset(const ElementSet& s,
                                        const WeightVector& w) const;
  ElementSet MaxWeightBasis(const WeightVector& w) const;

  // Rank of the subset encoded by `mask`. Throws CapabilityError when
  // m > kMaxEnumerationSize.
  int RankOfMask(std::uint32_t mask) const;

  // Matroid in which every element of `removed` becomes a loop and the rank
  // of any set equals the original rank of the set minus `removed`.
  Matroid DeleteElements(const ElementSet& removed) const;

 private:
  struct RankTable;

  void CheckElements(const ElementSet& s) const;
  int RankUnchecked(const ElementSet& s) const;
  bool IndependentUnchecked(const ElementSet& s) const;
  const std::vector<std::uint8_t>& Table() const;

  MatroidSpec spec_;
  int m_ = 0;
  // Partition: block index of each element.
  std::vector<int> block_of_;
  // Explicit: circuits as sets.
  std::vector<ElementSet> circuits_;
  std::shared_ptr<RankTable> table_;
};

// All circuits (minimal dependent sets) of a matroid with
// m <= kMaxEnumerationSize, each as an ascending element list.
std::vector<std::vector<int>> Circuits(const Matroid& matroid);

}  // namespace onlinerank

#endif  // ONLINERANK_MATROID_H_
