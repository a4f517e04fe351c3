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

#include "onlinerank/offline.h"

#include <cmath>
#include <functional>

#include "onlinerank/errors.h"
#include "onlinerank/guess.h"

namespace onlinerank {

namespace {

OfflineSolution Evaluate(const Instance& instance, const ElementSet& chosen) {
  OfflineSolution s;
  s.chosen = chosen;
  for (const Arrival& a : instance.arrivals()) {
    ElementSet witness = a.matroid.MaxWeightIndependentSubset(chosen, a.weights);
    witness.ForEach([&](int e) { s.value += a.weights[e]; });
    s.per_round.push_back(std::move(witness));
  }
  return s;
}

void CheckMatroidPoint(const Matroid& matroid, const FracPoint& point,
                       LpConstraint kind, int round, ViolationReport& report) {
  const SetExcess worst = MostViolatedSet(matroid, point);
  if (worst.excess > kEpsilon) {
    report.violations.push_back(
        LpViolation{kind, round, -1, worst.set, worst.excess});
  }
}

}  // namespace

OfflineSolution BruteForceOpt(const Instance& instance) {
  const int m = instance.m();
  if (m > kMaxEnumerationSize) {
    throw CapabilityError("brute-force optimum limited to m <= " +
                          std::to_string(kMaxEnumerationSize) + " (got m = " +
                          std::to_string(m) + ")");
  }
  OfflineSolution best = Evaluate(instance, ElementSet());
  ElementSet current;
  // Pre-order DFS adding elements in increasing order visits sets in
  // lexicographic order, so strict improvement keeps the smallest maximizer.
  std::function<void(int)> extend = [&](int next) {
    for (int e = next; e < m; ++e) {
      current.Insert(e);
      if (instance.constraint().IsIndependent(current)) {
        OfflineSolution candidate = Evaluate(instance, current);
        if (candidate.value > best.value + kEpsilon) best = std::move(candidate);
        extend(e + 1);
      }
      current.Erase(e);
    }
  };
  extend(0);
  return best;
}

OfflineSolution GreedyOpt(const Instance& instance) {
  ElementSet chosen;
  double value = instance.TotalValue(chosen);
  while (true) {
    int best_element = -1;
    double best_gain = kEpsilon;
    for (int e = 0; e < instance.m(); ++e) {
      if (chosen.Contains(e)) continue;
      ElementSet grown = chosen;
      grown.Insert(e);
      if (!instance.constraint().IsIndependent(grown)) continue;
      const double gain = instance.TotalValue(grown) - value;
      if (gain > best_gain) {
        best_gain = gain;
        best_element = e;
      }
    }
    if (best_element < 0) break;
    chosen.Insert(best_element);
    value += best_gain;
  }
  return Evaluate(instance, chosen);
}

std::string ConstraintName(LpConstraint c) {
  switch (c) {
    case LpConstraint::kConstraintMatroid:
      return "constraint-matroid";
    case LpConstraint::kArrivalMatroid:
      return "arrival-matroid";
    case LpConstraint::kZBelowX:
      return "z-below-x";
    case LpConstraint::kNonNegative:
      return "nonnegative";
    case LpConstraint::kCoverageUpper:
      return "coverage-upper";
    case LpConstraint::kCoverageLower:
      return "coverage-lower";
  }
  return "unknown";
}

int ViolationReport::Count(LpConstraint c) const {
  int count = 0;
  for (const LpViolation& v : violations) count += v.constraint == c;
  return count;
}

ViolationReport CheckLp1(const Instance& instance, const FracPoint& x,
                         const std::vector<FracPoint>& z) {
  const int m = instance.m();
  if (static_cast<int>(x.size()) != m ||
      static_cast<int>(z.size()) != instance.n()) {
    throw InvalidInputError("solution dimensions do not match instance");
  }
  ViolationReport report;
  for (int e = 0; e < m; ++e) {
    if (x[e] < -kEpsilon) {
      report.violations.push_back(
          LpViolation{LpConstraint::kNonNegative, -1, e, {}, -x[e]});
    }
  }
  CheckMatroidPoint(instance.constraint(), x, LpConstraint::kConstraintMatroid,
                    -1, report);
  for (int i = 0; i < instance.n(); ++i) {
    if (static_cast<int>(z[i].size()) != m) {
      throw InvalidInputError("z row length does not match instance");
    }
    for (int e = 0; e < m; ++e) {
      if (z[i][e] < -kEpsilon) {
        report.violations.push_back(
            LpViolation{LpConstraint::kNonNegative, i, e, {}, -z[i][e]});
      }
      if (z[i][e] > x[e] + kEpsilon) {
        report.violations.push_back(
            LpViolation{LpConstraint::kZBelowX, i, e, {}, z[i][e] - x[e]});
      }
    }
    CheckMatroidPoint(instance.arrival(i).matroid, z[i],
                      LpConstraint::kArrivalMatroid, i, report);
  }
  return report;
}

ViolationReport CheckLp2(const Instance& instance, double alpha,
                         const FracPoint& x, const std::vector<FracPoint>& z) {
  ViolationReport report = CheckLp1(instance, x, z);
  for (int e = 0; e < instance.m(); ++e) {
    double coverage = 0.0;
    for (const FracPoint& row : z) coverage += row[e];
    if (coverage > alpha * x[e] + kEpsilon) {
      report.violations.push_back(LpViolation{
          LpConstraint::kCoverageUpper, -1, e, {}, coverage - alpha * x[e]});
    }
    if (coverage < alpha * x[e] / 2.0 - kEpsilon) {
      report.violations.push_back(
          LpViolation{LpConstraint::kCoverageLower, -1, e, {},
                      alpha * x[e] / 2.0 - coverage});
    }
  }
  return report;
}

std::vector<Lp2Solution> DecomposeOptimal(const Instance& instance,
                                          const OfflineSolution& opt) {
  if (!instance.IsUnweighted()) {
    throw InvalidInputError("decomposition is defined for unweighted instances");
  }
  const int m = instance.m();
  const int n = instance.n();
  if (static_cast<int>(opt.per_round.size()) != n) {
    throw InvalidInputError("solution does not match instance");
  }
  std::vector<int> coverage(m, 0);
  for (const ElementSet& witness : opt.per_round) {
    witness.ForEach([&](int e) { ++coverage[e]; });
  }
  std::vector<Lp2Solution> out;
  const int top = CeilLog2(std::max(n, 1));
  for (int k = 0; k <= top; ++k) {
    Lp2Solution s;
    s.alpha = std::ldexp(1.0, k);
    s.x.assign(m, 0.0);
    s.z.assign(n, FracPoint(m, 0.0));
    for (int e = 0; e < m; ++e) {
      if (!opt.chosen.Contains(e)) continue;
      if (!(coverage[e] > s.alpha / 2.0 && coverage[e] <= s.alpha)) continue;
      s.x[e] = 1.0;
      for (int i = 0; i < n; ++i) {
        if (opt.per_round[i].Contains(e)) {
          s.z[i][e] = 1.0;
          s.objective += 1.0;
        }
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace onlinerank
