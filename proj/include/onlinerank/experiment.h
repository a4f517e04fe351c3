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

#ifndef ONLINERANK_EXPERIMENT_H_
#define ONLINERANK_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "onlinerank/algg.h"
#include "onlinerank/instance.h"

namespace onlinerank {

enum class SchemeKind { kKnown, kUnknown };

struct ExperimentConfig {
  int trials = 1;
  std::uint64_t master_seed = 0;
  SchemeKind scheme = SchemeKind::kKnown;
  ElementOrder order = ElementOrder::kAscending;
  // Re-check rounding safety (F independent in M, F monotone) on every trial
  // and record violations as trial errors.
  bool check_invariants = true;
  // Worker threads; 0 uses the hardware concurrency.
  int threads = 0;
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  // Weighted instances: the weight bucket used, else -1.
  int bucket = -1;
  double frac_profit = 0.0;
  double int_profit = 0.0;
  // Weighted instances: the under-counting scaled profit.
  double scaled_profit = 0.0;
  int f_size = 0;
  // Largest first-fit cover, over rounds, of the elements F gained that round
  // in that round's arrival matroid.
  int max_cover = 0;
  std::string error;
};

struct RunReport {
  int m = 0;
  int n = 0;
  bool weighted = false;
  std::uint64_t master_seed = 0;
  std::string scheme;
  std::string order;
  std::vector<TrialRow> rows;
  double opt = 0.0;
  // "brute-force" for m <= 16, else "greedy-lower-bound".
  std::string opt_kind;
  double greedy = 0.0;
  int failed_trials = 0;
  double mean_frac_profit = 0.0;
  double se_frac_profit = 0.0;
  double mean_int_profit = 0.0;
  double se_int_profit = 0.0;
  double mean_f_size = 0.0;
  // opt / mean_int_profit; absent when the mean profit is 0.
  std::optional<double> empirical_ratio;
};

// Runs `trials` seeded pipeline trials. Trial t uses seed
// DeriveSeed(master_seed, "trial", t); trials may run on several threads but
// every output depends only on (instance, config).
RunReport RunExperiment(const Instance& instance, const ExperimentConfig& config);

// Fills the aggregate fields from the rows (successful trials only).
void ComputeAggregates(RunReport& report);

// Columns: seed,alpha,frac_profit,int_profit,F_size,opt,opt_kind
void WriteCsv(const RunReport& report, std::ostream& out);
nlohmann::json ReportToJson(const RunReport& report);

std::optional<SchemeKind> ParseSchemeKind(const std::string& name);
std::optional<ElementOrder> ParseElementOrder(const std::string& name);

}  // namespace onlinerank

#endif  // ONLINERANK_EXPERIMENT_H_
