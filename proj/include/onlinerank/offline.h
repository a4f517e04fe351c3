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

#ifndef ONLINERANK_OFFLINE_H_
#define ONLINERANK_OFFLINE_H_

#include <string>
#include <vector>

#include "onlinerank/element_set.h"
#include "onlinerank/instance.h"
#include "onlinerank/polytope.h"

namespace onlinerank {

// An offline solution O with per-arrival witnesses O_i, each a max-weight
// independent subset of O in N_i, so value = sum_i w_i(O_i).
struct OfflineSolution {
  ElementSet chosen;
  double value = 0.0;
  std::vector<ElementSet> per_round;
};

// Exhaustive maximum of sum_i f_i(O) over independent O, enumerated by a DFS
// that never extends a dependent set. Ties keep the lexicographically
// smallest O. Throws CapabilityError for m > kMaxEnumerationSize.
OfflineSolution BruteForceOpt(const Instance& instance);

// Adds the independence-preserving element with the largest positive marginal
// gain (lowest index on ties) until no element gains.
OfflineSolution GreedyOpt(const Instance& instance);

// Constraint classes of the two relaxations. The first three plus
// nonnegativity form the plain relaxation; the alpha-restricted one adds the
// coverage bands sum_i z_{i,e} <= alpha x_e and >= alpha x_e / 2.
enum class LpConstraint {
  kConstraintMatroid,  // x(S) <= r(S)
  kArrivalMatroid,     // z_i(S) <= r_i(S)
  kZBelowX,            // z_{i,e} <= x_e
  kNonNegative,
  kCoverageUpper,  // sum_i z_{i,e} <= alpha x_e
  kCoverageLower,  // sum_i z_{i,e} >= alpha x_e / 2
};

std::string ConstraintName(LpConstraint c);

struct LpViolation {
  LpConstraint constraint;
  int round = -1;    // -1 when not per-round
  int element = -1;  // -1 when set-valued
  ElementSet witness;
  double magnitude = 0.0;
};

struct ViolationReport {
  std::vector<LpViolation> violations;

  bool Ok() const { return violations.empty(); }
  int Count(LpConstraint c) const;
};

// Checks x in P(M), z_i in P(N_i), z <= x and nonnegativity with tolerance
// kEpsilon. Generic matroids need m <= kMaxEnumerationSize.
ViolationReport CheckLp1(const Instance& instance, const FracPoint& x,
                         const std::vector<FracPoint>& z);

// CheckLp1 plus both coverage bands for the given alpha.
ViolationReport CheckLp2(const Instance& instance, double alpha,
                         const FracPoint& x, const std::vector<FracPoint>& z);

// Integral solution of the alpha-restricted relaxation.
struct Lp2Solution {
  double alpha = 1.0;
  FracPoint x;
  std::vector<FracPoint> z;
  double objective = 0.0;
};

// Splits an integral optimum into one solution per alpha in
// {1, 2, ..., 2^ceil(log2 n)}: element e with coverage c_e = #{i : e in O_i}
// goes to the alpha with alpha/2 < c_e <= alpha, carrying x_e = 1 and its
// z-entries. Uncovered elements go nowhere. Objectives sum to opt.value.
// Unweighted instances only.
std::vector<Lp2Solution> DecomposeOptimal(const Instance& instance,
                                          const OfflineSolution& opt);

}  // namespace onlinerank

#endif  // ONLINERANK_OFFLINE_H_
