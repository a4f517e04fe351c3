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

#ifndef ONLINERANK_COVERING_H_
#define ONLINERANK_COVERING_H_

#include <vector>

#include "onlinerank/element_set.h"
#include "onlinerank/matroid.h"
#include "onlinerank/polytope.h"
#include "onlinerank/rng.h"

namespace onlinerank {

// A set D split into disjoint independent parts whose union is D.
struct CoverResult {
  ElementSet sampled;
  std::vector<ElementSet> parts;
  int rounds = 0;
};

// Each element independently with probability z_e.
ElementSet SampleSet(const FracPoint& z, Rng& rng);

// Scans D in ascending order and puts each element into the first part that
// stays independent, opening a new part when none does. Throws
// InvalidInputError for a loop in D.
CoverResult FirstFitCover(const Matroid& matroid, const ElementSet& sampled);

std::vector<int> AscendingOrder(int m);
std::vector<int> ShuffledOrder(int m, Rng& rng);

// Builds an ordering back to front. Among the remaining elements R, the toss
// probability p_e = Pr[e not in span(D - e)], with D drawn from z restricted
// to R, is estimated from `samples` draws; the element with the largest
// estimate is placed last, provided the estimate is at least
// 1/2 - 2 * standard error. Requires z(S) <= r(S)/2 for every S (checked).
// Throws EstimationError when no element clears the threshold.
std::vector<int> LastElementOrder(const Matroid& matroid, const FracPoint& z,
                                  Rng& rng, int samples);

// Covering process: keep a survivor set S = E; each iteration opens an empty
// part and scans S in `ordering`. When part + e is independent a coin with
// probability z_e decides whether e joins the part, and e leaves S either
// way; otherwise e waits for the next iteration. The first survivor always
// leaves, so at most m iterations run. The union of the parts has the same
// distribution as SampleSet(z). Loops (z_e must be 0) leave S untossed.
CoverResult SequentialRoundsCover(const Matroid& matroid, const FracPoint& z,
                                  Rng& rng, const std::vector<int>& ordering);

}  // namespace onlinerank

#endif  // ONLINERANK_COVERING_H_
