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

#include "onlinerank/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "onlinerank/covering.h"
#include "onlinerank/errors.h"
#include "onlinerank/guess.h"
#include "onlinerank/offline.h"
#include "onlinerank/rounding.h"
#include "onlinerank/rng.h"
#include "onlinerank/weighted.h"

namespace onlinerank {

namespace {

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string FormatAlpha(double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.0f", alpha);
  return buf;
}

std::string SafetyViolation(const Instance& instance,
                            const CoupledTrace& trace) {
  ElementSet previous;
  for (std::size_t i = 0; i < trace.f_rounds.size(); ++i) {
    const ElementSet& f = trace.f_rounds[i];
    if (!previous.IsSubsetOf(f)) {
      return "F shrank in round " + std::to_string(i);
    }
    if (!instance.constraint().IsIndependent(f)) {
      return "F dependent in round " + std::to_string(i);
    }
    previous = f;
  }
  return "";
}

int MaxRoundCover(const Instance& instance, const CoupledTrace& trace) {
  int worst = 0;
  ElementSet previous;
  for (std::size_t i = 0; i < trace.f_rounds.size(); ++i) {
    const ElementSet gained = trace.f_rounds[i] - previous;
    previous = trace.f_rounds[i];
    if (gained.Empty()) continue;
    const CoverResult cover =
        FirstFitCover(instance.arrival(static_cast<int>(i)).matroid, gained);
    worst = std::max(worst, cover.rounds);
  }
  return worst;
}

TrialRow RunTrial(const Instance& instance, const ExperimentConfig& config,
                  const GuessScheme& scheme, const RoundingOptions& rounding,
                  FractionalRunCache* cache, int t) {
  TrialRow row;
  row.trial = t;
  row.seed = DeriveSeed(config.master_seed, "trial", t);
  try {
    CoupledTrace trace;
    if (instance.IsUnweighted()) {
      trace = FullPipeline(instance, scheme, row.seed, rounding, cache);
      row.frac_profit = trace.fractional_profit;
      row.int_profit = trace.total_profit;
      row.scaled_profit = trace.total_profit;
    } else {
      WeightedRunOptions options;
      options.rounding = rounding;
      WeightedRunResult result =
          RunWeighted(instance, scheme, config.scheme == SchemeKind::kKnown,
                      row.seed, options);
      row.bucket = result.bucket;
      row.frac_profit = result.scale * result.trace.fractional_profit;
      row.int_profit = result.exact_profit;
      row.scaled_profit = result.scaled_profit;
      trace = std::move(result.trace);
    }
    row.alpha = trace.alpha;
    row.f_size = trace.FinalSet().Size();
    row.max_cover = MaxRoundCover(instance, trace);
    if (config.check_invariants) row.error = SafetyViolation(instance, trace);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::optional<SchemeKind> ParseSchemeKind(const std::string& name) {
  if (name == "known") return SchemeKind::kKnown;
  if (name == "unknown") return SchemeKind::kUnknown;
  return std::nullopt;
}

std::optional<ElementOrder> ParseElementOrder(const std::string& name) {
  if (name == "asc") return ElementOrder::kAscending;
  if (name == "desc") return ElementOrder::kDescending;
  if (name == "shuffle") return ElementOrder::kShuffle;
  return std::nullopt;
}

RunReport RunExperiment(const Instance& instance,
                        const ExperimentConfig& config) {
  if (config.trials < 1) throw InvalidInputError("trials must be >= 1");
  RunReport report;
  report.m = instance.m();
  report.n = instance.n();
  report.weighted = !instance.IsUnweighted();
  report.master_seed = config.master_seed;
  report.scheme = config.scheme == SchemeKind::kKnown ? "known" : "unknown";
  switch (config.order) {
    case ElementOrder::kAscending:
      report.order = "asc";
      break;
    case ElementOrder::kDescending:
      report.order = "desc";
      break;
    case ElementOrder::kShuffle:
      report.order = "shuffle";
      break;
  }

  const GuessScheme scheme =
      config.scheme == SchemeKind::kKnown
          ? GuessScheme(KnownN{instance.n()})
          : GuessScheme(UnknownN{});
  RoundingOptions rounding;
  rounding.order.order = config.order;
  rounding.order.seed = DeriveSeed(config.master_seed, "order");

  // Only unweighted runs share fractional runs; weighted trials rebuild
  // their bucket instance per trial.
  FractionalRunCache cache(instance, rounding.order);
  FractionalRunCache* shared = instance.IsUnweighted() ? &cache : nullptr;

  report.rows.resize(config.trials);
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      report.rows[t] = RunTrial(instance, config, scheme, rounding, shared, t);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  if (instance.m() <= kMaxEnumerationSize) {
    report.opt = BruteForceOpt(instance).value;
    report.opt_kind = "brute-force";
  }
  report.greedy = GreedyOpt(instance).value;
  if (report.opt_kind.empty()) {
    report.opt = report.greedy;
    report.opt_kind = "greedy-lower-bound";
  }
  ComputeAggregates(report);
  return report;
}

void ComputeAggregates(RunReport& report) {
  std::vector<const TrialRow*> ok;
  for (const TrialRow& row : report.rows) {
    if (row.error.empty()) ok.push_back(&row);
  }
  report.failed_trials = static_cast<int>(report.rows.size() - ok.size());
  const double count = static_cast<double>(ok.size());
  auto mean_se = [&](auto field) {
    if (ok.empty()) return std::pair<double, double>{0.0, 0.0};
    double sum = 0.0;
    for (const TrialRow* r : ok) sum += field(*r);
    const double mean = sum / count;
    if (ok.size() < 2) return std::pair<double, double>{mean, 0.0};
    double sq = 0.0;
    for (const TrialRow* r : ok) sq += (field(*r) - mean) * (field(*r) - mean);
    return std::pair<double, double>{mean,
                                     std::sqrt(sq / (count - 1.0) / count)};
  };
  std::tie(report.mean_frac_profit, report.se_frac_profit) =
      mean_se([](const TrialRow& r) { return r.frac_profit; });
  std::tie(report.mean_int_profit, report.se_int_profit) =
      mean_se([](const TrialRow& r) { return r.int_profit; });
  report.mean_f_size =
      mean_se([](const TrialRow& r) { return double(r.f_size); }).first;
  report.empirical_ratio.reset();
  if (report.mean_int_profit > 0.0) {
    report.empirical_ratio = report.opt / report.mean_int_profit;
  }
}

void WriteCsv(const RunReport& report, std::ostream& out) {
  out << "seed,alpha,frac_profit,int_profit,F_size,opt,opt_kind\n";
  for (const TrialRow& row : report.rows) {
    out << row.seed << ',';
    if (row.error.empty()) {
      out << FormatAlpha(row.alpha) << ',' << FormatNumber(row.frac_profit)
          << ',' << FormatNumber(row.int_profit) << ',' << row.f_size;
    } else {
      out << ",,,";
    }
    out << ',' << FormatNumber(report.opt) << ',' << report.opt_kind << '\n';
  }
}

nlohmann::json ReportToJson(const RunReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRow& row : report.rows) {
    nlohmann::json r = {{"trial", row.trial},
                        {"seed", row.seed},
                        {"alpha", row.alpha},
                        {"frac_profit", row.frac_profit},
                        {"int_profit", row.int_profit},
                        {"F_size", row.f_size},
                        {"max_cover", row.max_cover}};
    if (row.bucket >= 0) {
      r["bucket"] = row.bucket;
      r["scaled_profit"] = row.scaled_profit;
    }
    if (!row.error.empty()) r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  nlohmann::json aggregate = {
      {"trials", report.rows.size()},
      {"failed_trials", report.failed_trials},
      {"mean_frac_profit", report.mean_frac_profit},
      {"se_frac_profit", report.se_frac_profit},
      {"mean_int_profit", report.mean_int_profit},
      {"se_int_profit", report.se_int_profit},
      {"mean_F_size", report.mean_f_size},
      {"opt", report.opt},
      {"opt_kind", report.opt_kind},
      {"greedy", report.greedy},
      {"empirical_ratio", report.empirical_ratio
                              ? nlohmann::json(*report.empirical_ratio)
                              : nlohmann::json(nullptr)}};
  return {{"m", report.m},
          {"n", report.n},
          {"weighted", report.weighted},
          {"master_seed", report.master_seed},
          {"scheme", report.scheme},
          {"order", report.order},
          {"aggregate", aggregate},
          {"rows", rows}};
}

}  // namespace onlinerank
