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

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "onlinerank/errors.h"
#include "onlinerank/experiment.h"
#include "onlinerank/generate.h"
#include "onlinerank/instance.h"
#include "onlinerank/verify.h"

namespace {

using onlinerank::InvalidInputError;

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online maximization of sums of matroid rank functions"};
  app.require_subcommand(1);

  std::string kind;
  onlinerank::GeneratorParams params;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind,
                  "random-partition|random-uniform|random-graphic|"
                  "max-coverage")
      ->required();
  gen->add_option("--m", params.m, "Ground set size")->required();
  gen->add_option("--n", params.n, "Number of arrivals")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("-o,--output", gen_out, "Instance JSON path")->required();
  gen->add_flag("--weighted", params.weighted, "Draw random weights");
  gen->add_option("--budget", params.budget, "max-coverage: sets to choose");

  std::string instance_path;
  onlinerank::ExperimentConfig config;
  std::string scheme = "known";
  std::string order = "asc";
  std::string csv_path;
  std::string json_path;
  bool skip_invariants = false;
  CLI::App* run = app.add_subcommand("run", "Run seeded pipeline trials");
  run->add_option("--instance", instance_path, "Instance JSON path")
      ->required();
  run->add_option("--trials", config.trials, "Number of trials");
  run->add_option("--seed", config.master_seed, "Master seed");
  run->add_option("--scheme", scheme, "known|unknown");
  run->add_option("--order", order, "asc|desc|shuffle");
  run->add_option("--csv", csv_path, "Per-trial CSV output path");
  run->add_option("--json", json_path, "JSON report output path");
  run->add_option("--threads", config.threads, "Worker threads (0 = auto)");
  run->add_flag("--no-invariants", skip_invariants,
                "Skip per-trial rounding safety checks");

  std::string suite;
  onlinerank::VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", suite, "Suite name or all")->required();
  verify->add_option("--seed", verify_options.seed, "Suite seed");
  verify->add_option("--lemma5-constant", verify_options.lemma5_constant,
                     "Constant in the coverage lower bound");
  verify->add_option("--instances", verify_options.instances,
                     "Random instances per suite");
  verify->add_option("--trials", verify_options.trials,
                     "Trials or samples per case");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto parsed = onlinerank::ParseGeneratorKind(kind);
      if (!parsed) throw InvalidInputError("unknown generator kind: " + kind);
      onlinerank::SaveInstance(onlinerank::Generate(*parsed, params, gen_seed),
                               gen_out);
      return 0;
    }
    if (*run) {
      const auto parsed_scheme = onlinerank::ParseSchemeKind(scheme);
      if (!parsed_scheme) throw InvalidInputError("unknown scheme: " + scheme);
      const auto parsed_order = onlinerank::ParseElementOrder(order);
      if (!parsed_order) throw InvalidInputError("unknown order: " + order);
      config.scheme = *parsed_scheme;
      config.order = *parsed_order;
      config.check_invariants = !skip_invariants;
      const onlinerank::Instance instance =
          onlinerank::LoadInstance(instance_path);
      const onlinerank::RunReport report =
          onlinerank::RunExperiment(instance, config);
      if (!csv_path.empty()) {
        std::ostringstream csv;
        onlinerank::WriteCsv(report, csv);
        WriteFile(csv_path, csv.str());
      }
      const std::string json = onlinerank::ReportToJson(report).dump(2) + "\n";
      if (!json_path.empty()) {
        WriteFile(json_path, json);
      }
      if (csv_path.empty() && json_path.empty()) std::cout << json;
      return report.failed_trials == 0 ? 0 : 1;
    }
    if (*verify) {
      bool all_passed = true;
      for (const onlinerank::SuiteResult& result :
           onlinerank::RunVerify(suite, verify_options)) {
        onlinerank::PrintSuite(result, std::cout);
        all_passed = all_passed && result.passed();
      }
      return all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
