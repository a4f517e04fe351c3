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

#include "onlinerank/guess.h"

#include <algorithm>
#include <cmath>

#include "onlinerank/errors.h"

namespace onlinerank {

namespace {

void CheckHeavyTail(double epsilon, int i_max) {
  if (!(epsilon > 0.0) || i_max < 1) {
    throw InvalidInputError("heavy-tail guess needs epsilon > 0, i_max >= 1");
  }
}

double Term(double epsilon, int i) {
  return 1.0 / (i * std::pow(std::log1p(static_cast<double>(i)),
                             1.0 + epsilon));
}

}  // namespace

int CeilLog2(int n) {
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

double HeavyTailNormalizer(double epsilon, int i_max) {
  CheckHeavyTail(epsilon, i_max);
  double c = 0.0;
  for (int i = 1; i <= i_max; ++i) c += Term(epsilon, i);
  return c;
}

std::vector<double> HeavyTailProbabilities(double epsilon, int i_max) {
  const double c = HeavyTailNormalizer(epsilon, i_max);
  std::vector<double> p(i_max);
  double total = 0.0;
  for (int i = 1; i <= i_max; ++i) {
    p[i - 1] = Term(epsilon, i) / c;
    total += p[i - 1];
  }
  if (total < 1.0) p[0] += 1.0 - total;
  return p;
}

int SampleHeavyTailIndex(double epsilon, int i_max, Rng& rng) {
  const std::vector<double> p = HeavyTailProbabilities(epsilon, i_max);
  const double u = rng.Uniform01();
  double cumulative = 0.0;
  for (int i = 1; i <= i_max; ++i) {
    cumulative += p[i - 1];
    if (u < cumulative) return i;
  }
  return i_max;
}

std::vector<std::pair<double, double>> AlphaDistribution(
    const GuessScheme& scheme) {
  std::vector<std::pair<double, double>> out;
  if (const auto* known = std::get_if<KnownN>(&scheme)) {
    const int top = CeilLog2(std::max(known->n, 1));
    for (int i = 0; i <= top; ++i) {
      out.emplace_back(std::ldexp(1.0, i), 1.0 / (top + 1));
    }
    return out;
  }
  const auto& unknown = std::get<UnknownN>(scheme);
  const std::vector<double> p =
      HeavyTailProbabilities(unknown.epsilon, unknown.i_max);
  for (int i = 1; i <= unknown.i_max; ++i) {
    out.emplace_back(std::ldexp(1.0, i), p[i - 1]);
  }
  return out;
}

double SampleAlpha(const GuessScheme& scheme, Rng& rng) {
  if (const auto* known = std::get_if<KnownN>(&scheme)) {
    const int top = CeilLog2(std::max(known->n, 1));
    return std::ldexp(1.0, static_cast<int>(rng.UniformInt(top + 1)));
  }
  const auto& unknown = std::get<UnknownN>(scheme);
  return std::ldexp(1.0, SampleHeavyTailIndex(unknown.epsilon,
                                              unknown.i_max, rng));
}

}  // namespace onlinerank
