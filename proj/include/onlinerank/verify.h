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

#ifndef ONLINERANK_VERIFY_H_
#define ONLINERANK_VERIFY_H_

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "onlinerank/instance.h"

namespace onlinerank {

struct CheckResult {
  std::string name;
  long long checks = 0;
  long long violations = 0;
  // Smallest margin seen; negative margins are violations.
  double worst_slack = std::numeric_limits<double>::infinity();

  void Record(double slack, double tolerance = 0.0);
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Constant in the per-element coverage lower bound of the fractional run.
  double lemma5_constant = 48.0;
  // Random instances per feasibility suite.
  int instances = 200;
  // Trials per alpha in lemma7-size and samples per point in lemma9-cover.
  int trials = 10000;
};

// M = Uniform(8, 3) with eight random partition arrivals over 8 elements.
Instance FixedRoundingInstance(std::uint64_t seed);

std::vector<std::string> SuiteNames();

// Runs one named suite. Throws InvalidInputError for unknown names.
SuiteResult RunSuite(const std::string& name, const VerifyOptions& options);

// "all" runs every suite; any other name runs that suite alone.
std::vector<SuiteResult> RunVerify(const std::string& name,
                                   const VerifyOptions& options);

void PrintSuite(const SuiteResult& suite, std::ostream& out);

}  // namespace onlinerank

#endif  // ONLINERANK_VERIFY_H_
