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

#ifndef ONLINERANK_POLYTOPE_H_
#define ONLINERANK_POLYTOPE_H_

#include <vector>

#include "onlinerank/element_set.h"
#include "onlinerank/matroid.h"

namespace onlinerank {

// A point of [0, 1]^m indexed by element.
using FracPoint = std::vector<double>;

// How polytope queries are evaluated. kAuto uses the closed forms available
// for uniform and partition matroids and subset enumeration otherwise;
// kExhaustive always enumerates (m <= kMaxEnumerationSize).
enum class Evaluation { kAuto, kExhaustive };

// The set maximizing x(S) - r(S) and that excess. The empty set (excess 0)
// wins when no set is over its rank.
struct SetExcess {
  ElementSet set;
  double excess = 0.0;
};

// Generic (non-closed-form) queries throw CapabilityError when
// m > kMaxEnumerationSize. All queries throw InvalidInputError when x has the
// wrong length or e is out of range.

SetExcess MostViolatedSet(const Matroid& matroid, const FracPoint& x,
                          Evaluation eval = Evaluation::kAuto);

// x >= -eps and x(S) <= r(S) + eps for every S.
bool InPolytope(const Matroid& matroid, const FracPoint& x,
                Evaluation eval = Evaluation::kAuto);

// min over S containing e of r(S) - x(S - e): the largest value x_e can take
// with the other coordinates fixed. Assumes x is in the polytope.
double Headroom(const Matroid& matroid, const FracPoint& x, int e,
                Evaluation eval = Evaluation::kAuto);

// min over S containing e of r(S) - x(S), i.e. Headroom(e) - x_e. A value
// <= kEpsilon means e lies in a tight set.
double MinSlack(const Matroid& matroid, const FracPoint& x, int e,
                Evaluation eval = Evaluation::kAuto);

// Union of all sets S with x(S) >= r(S) - eps. Tight sets are closed under
// union and intersection, so this is the unique maximal tight set; empty
// when only the empty set is tight.
ElementSet MaximalTightSet(const Matroid& matroid, const FracPoint& x,
                           Evaluation eval = Evaluation::kAuto);

}  // namespace onlinerank

#endif  // ONLINERANK_POLYTOPE_H_
