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

#ifndef ONLINERANK_ALGG_H_
#define ONLINERANK_ALGG_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "onlinerank/instance.h"
#include "onlinerank/matroid.h"
#include "onlinerank/polytope.h"

namespace onlinerank {

// Multiplicative update x_e <- x_e * exp(kUpdateRate * ln(m) / alpha). The
// logarithm is natural throughout, including the analysis constants below.
inline constexpr double kUpdateRate = 8.0;

// exp(kUpdateRate * ln(m) / alpha).
double UpdateFactor(int m, double alpha);

// Order in which elements are offered when an arrival is processed.
enum class ElementOrder { kAscending, kDescending, kShuffle };

struct OrderPolicy {
  ElementOrder order = ElementOrder::kAscending;
  // Shuffle seed; each round draws its own permutation from it.
  std::uint64_t seed = 0;
};

std::vector<int> ProcessingOrder(const OrderPolicy& policy, int m, int round);

// One increase of x_e. z is the value written to z_{round,e}.
struct UpdateRecord {
  int round = 0;
  int element = 0;
  double x_before = 0.0;
  double x_after = 0.0;
  double z = 0.0;

  double delta() const { return x_after - x_before; }
};

// Evolving fractional solution of the online algorithm for one guess alpha.
// Rounds are numbered from 0. z is stored sparsely: only entries written
// during their round exist, every absent entry is 0.
class AlgGState {
 public:
  // x_e = 1/m^2 for every e. Throws InvalidInputError for m < 2 or
  // alpha < 1.
  AlgGState(int m, double alpha);

  double alpha() const { return alpha_; }
  int m() const { return m_; }
  int round() const { return static_cast<int>(z_.size()); }
  const FracPoint& x() const { return x_; }

  const std::vector<UpdateRecord>& trace() const { return trace_; }
  std::span<const UpdateRecord> RoundUpdates(int round) const;

  double Z(int round, int e) const;
  FracPoint ZVector(int round) const;
  // Dense z for every processed round.
  std::vector<FracPoint> ZMatrix() const;

  // Offers each element once, in policy order. Element e is raised when no
  // set containing it is tight for x in `constraint` and every set S
  // containing it has z_i(S) < r_i(S) - 1/2 in `arrival`; then
  //   x_e <- min(x_e * UpdateFactor, Headroom(constraint, x, e)),
  //   z_{i,e} <- x_e / 2.
  // Both guards are strict with kEpsilon tolerance.
  void ProcessArrival(const Matroid& constraint, const Matroid& arrival,
                      const OrderPolicy& order = {});

 private:
  double alpha_;
  int m_;
  double factor_;
  FracPoint x_;
  std::vector<std::vector<std::pair<int, double>>> z_;
  std::vector<UpdateRecord> trace_;
  std::vector<std::size_t> round_begin_;
};

// Runs the algorithm over every arrival. Weighted instances must be reduced
// first (see weighted.h); they throw InvalidInputError here.
AlgGState RunAlgG(const Instance& instance, double alpha,
                  const OrderPolicy& order = {});

// sum over rounds and elements of z_{i,e}.
double FractionalProfit(const AlgGState& state);

// One JSON object per update:
// {"round":i,"element":e,"x_before":...,"x_after":...,"z":...}
void WriteTraceJsonl(const AlgGState& state, std::ostream& out);

}  // namespace onlinerank

#endif  // ONLINERANK_ALGG_H_
