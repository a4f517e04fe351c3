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

#include "onlinerank/polytope.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <variant>

#include "onlinerank/errors.h"

namespace onlinerank {

namespace {

// A group of elements sharing one capacity: the whole ground set of a
// uniform matroid, or one block of a partition matroid.
struct CapacityGroup {
  std::vector<int> elements;
  int cap;
};

std::vector<CapacityGroup> Groups(const Matroid& matroid) {
  if (const auto* u = std::get_if<UniformSpec>(&matroid.spec())) {
    return {CapacityGroup{matroid.GroundSet().Elements(), u->k}};
  }
  const auto& p = std::get<PartitionSpec>(matroid.spec());
  std::vector<CapacityGroup> groups;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    groups.push_back(CapacityGroup{p.blocks[b], p.caps[b]});
  }
  return groups;
}

void CheckPoint(const Matroid& matroid, const FracPoint& x) {
  if (static_cast<int>(x.size()) != matroid.ground_size()) {
    throw InvalidInputError("point has length " + std::to_string(x.size()) +
                            ", matroid has ground-set size " +
                            std::to_string(matroid.ground_size()));
  }
}

void CheckElement(const Matroid& matroid, int e) {
  if (e < 0 || e >= matroid.ground_size()) {
    throw InvalidInputError("element " + std::to_string(e) +
                            " out of range");
  }
}

bool UseClosedForm(const Matroid& matroid, Evaluation eval) {
  if (eval == Evaluation::kAuto && matroid.HasClosedForm()) return true;
  if (matroid.ground_size() > kMaxEnumerationSize) {
    throw CapabilityError(
        "polytope query needs subset enumeration, limited to m <= " +
        std::to_string(kMaxEnumerationSize) + " (got m = " +
        std::to_string(matroid.ground_size()) + ")");
  }
  return false;
}

// x(S) for every subset S of the ground set, indexed by mask.
std::vector<double> SubsetSums(const FracPoint& x) {
  const std::uint32_t count = std::uint32_t{1} << x.size();
  std::vector<double> sums(count, 0.0);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    sums[mask] = sums[mask & (mask - 1)] + x[std::countr_zero(mask)];
  }
  return sums;
}

}  // namespace

SetExcess MostViolatedSet(const Matroid& matroid, const FracPoint& x,
                          Evaluation eval) {
  CheckPoint(matroid, x);
  SetExcess best;
  if (UseClosedForm(matroid, eval)) {
    // Within a group the worst set of size s is the s largest coordinates.
    for (CapacityGroup& g : Groups(matroid)) {
      std::stable_sort(g.elements.begin(), g.elements.end(),
                       [&](int a, int b) { return x[a] > x[b]; });
      double prefix = 0.0;
      double group_best = 0.0;
      std::size_t group_size = 0;
      for (std::size_t s = 1; s <= g.elements.size(); ++s) {
        prefix += x[g.elements[s - 1]];
        const double excess =
            prefix - std::min<double>(static_cast<double>(s), g.cap);
        if (excess > group_best) {
          group_best = excess;
          group_size = s;
        }
      }
      for (std::size_t s = 0; s < group_size; ++s) {
        best.set.Insert(g.elements[s]);
      }
      best.excess += group_best;
    }
    return best;
  }
  const std::vector<double> sums = SubsetSums(x);
  for (std::uint32_t mask = 1; mask < sums.size(); ++mask) {
    const double excess = sums[mask] - matroid.RankOfMask(mask);
    if (excess > best.excess) {
      best.excess = excess;
      best.set = ElementSet::FromMask(mask);
    }
  }
  return best;
}

bool InPolytope(const Matroid& matroid, const FracPoint& x, Evaluation eval) {
  CheckPoint(matroid, x);
  for (double v : x) {
    if (v < -kEpsilon) return false;
  }
  return MostViolatedSet(matroid, x, eval).excess <= kEpsilon;
}

double Headroom(const Matroid& matroid, const FracPoint& x, int e,
                Evaluation eval) {
  CheckPoint(matroid, x);
  CheckElement(matroid, e);
  if (UseClosedForm(matroid, eval)) {
    // For a capacity-c group G containing e: sets of size <= c give at least
    // r({e}) = 1; larger sets are minimized by taking all of G.
    for (const CapacityGroup& g : Groups(matroid)) {
      if (std::find(g.elements.begin(), g.elements.end(), e) ==
          g.elements.end()) {
        continue;
      }
      double group_sum = 0.0;
      for (int f : g.elements) group_sum += x[f];
      const double full = g.cap - (group_sum - x[e]);
      return g.cap >= 1 ? std::min(1.0, full) : full;
    }
  }
  const std::vector<double> sums = SubsetSums(x);
  const std::uint32_t bit = std::uint32_t{1} << e;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = bit; mask < sums.size(); mask = (mask + 1) | bit) {
    best = std::min(best, matroid.RankOfMask(mask) - (sums[mask] - x[e]));
  }
  return best;
}

double MinSlack(const Matroid& matroid, const FracPoint& x, int e,
                Evaluation eval) {
  return Headroom(matroid, x, e, eval) - x[e];
}

ElementSet MaximalTightSet(const Matroid& matroid, const FracPoint& x,
                           Evaluation eval) {
  CheckPoint(matroid, x);
  ElementSet tight;
  if (UseClosedForm(matroid, eval)) {
    for (const CapacityGroup& g : Groups(matroid)) {
      double group_sum = 0.0;
      for (int f : g.elements) group_sum += x[f];
      const double group_rank =
          std::min<double>(static_cast<double>(g.elements.size()), g.cap);
      if (!g.elements.empty() && group_sum >= group_rank - kEpsilon) {
        for (int f : g.elements) tight.Insert(f);
        continue;
      }
      // Below capacity only sets of saturated singletons can be tight.
      for (int f : g.elements) {
        if (x[f] >= 1.0 - kEpsilon) tight.Insert(f);
      }
    }
    return tight;
  }
  const std::vector<double> sums = SubsetSums(x);
  std::uint64_t mask_union = 0;
  for (std::uint32_t mask = 1; mask < sums.size(); ++mask) {
    if (sums[mask] >= matroid.RankOfMask(mask) - kEpsilon) mask_union |= mask;
  }
  return ElementSet::FromMask(mask_union);
}

}  // namespace onlinerank
