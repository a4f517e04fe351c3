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

#ifndef ONLINERANK_GUESS_H_
#define ONLINERANK_GUESS_H_

#include <utility>
#include <variant>
#include <vector>

#include "onlinerank/rng.h"

namespace onlinerank {

// Number of arrivals known up front: alpha uniform over
// {1, 2, 4, ..., 2^ceil(log2 n)}.
struct KnownN {
  int n = 1;
};

// Number of arrivals unknown: alpha = 2^i with probability
// 1 / (c * i * ln(1 + i)^(1 + epsilon)) for 1 <= i <= i_max. The normalizer c
// is the direct sum of the unnormalized terms; any rounding leftover goes to
// i = 1.
struct UnknownN {
  double epsilon = 1.0;
  int i_max = 64;
};

using GuessScheme = std::variant<KnownN, UnknownN>;

// sum_{i=1}^{i_max} 1 / (i * ln(1 + i)^(1 + epsilon)).
double HeavyTailNormalizer(double epsilon, int i_max);

// Probabilities of the exponents 1..i_max under the heavy-tailed guess;
// entry [i - 1] is the probability of i.
std::vector<double> HeavyTailProbabilities(double epsilon, int i_max);

// Samples i in [1, i_max] from HeavyTailProbabilities.
int SampleHeavyTailIndex(double epsilon, int i_max, Rng& rng);

// (alpha, probability) pairs in increasing alpha order.
std::vector<std::pair<double, double>> AlphaDistribution(
    const GuessScheme& scheme);

// Alpha is carried as a double: the unknown-n support reaches 2^64, and every
// power of two is exactly representable.
double SampleAlpha(const GuessScheme& scheme, Rng& rng);

// ceil(log2 n) for n >= 1 (0 for n <= 1).
int CeilLog2(int n);

}  // namespace onlinerank

#endif  // ONLINERANK_GUESS_H_
