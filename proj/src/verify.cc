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

#include "onlinerank/verify.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>

#include "onlinerank/algg.h"
#include "onlinerank/covering.h"
#include "onlinerank/errors.h"
#include "onlinerank/generate.h"
#include "onlinerank/guess.h"
#include "onlinerank/instance.h"
#include "onlinerank/offline.h"
#include "onlinerank/polytope.h"
#include "onlinerank/rounding.h"
#include "onlinerank/rng.h"
#include "onlinerank/weighted.h"

namespace onlinerank {

void CheckResult::Record(double slack, double tolerance) {
  ++checks;
  if (slack < -tolerance) ++violations;
  worst_slack = std::min(worst_slack, slack + 0.0);
}

bool SuiteResult::passed() const {
  for (const CheckResult& c : checks) {
    if (c.violations > 0) return false;
  }
  return true;
}

namespace {

using Suite = std::function<SuiteResult(const VerifyOptions&)>;

// A random unweighted run shared by the fractional-run suites.
struct FractionalRun {
  Instance instance;
  AlgGState state;
};

std::vector<FractionalRun> FractionalRuns(const VerifyOptions& options) {
  std::vector<FractionalRun> runs;
  for (int k = 0; k < options.instances; ++k) {
    Rng rng = Rng::ForStream(options.seed, "fractional-runs", k);
    const int m = rng.UniformRange(2, 12);
    const int n = rng.UniformRange(1, 16);
    Instance instance = RandomMixedInstance(m, n, rng);
    const double alpha = SampleAlpha(KnownN{n}, rng);
    AlgGState state = RunAlgG(instance, alpha);
    runs.push_back(FractionalRun{std::move(instance), std::move(state)});
  }
  return runs;
}

SuiteResult MatroidAxioms(const VerifyOptions& options) {
  CheckResult empty{"empty-set-independent"};
  CheckResult hereditary{"hereditary"};
  CheckResult augmentation{"augmentation"};
  CheckResult rank_consistent{"rank-matches-independence"};
  CheckResult submodular{"rank-submodular"};
  CheckResult monotone{"rank-unit-increase"};
  const MatroidFamily families[] = {MatroidFamily::kUniform,
                                    MatroidFamily::kPartition,
                                    MatroidFamily::kGraphic,
                                    MatroidFamily::kExplicit};
  for (MatroidFamily family : families) {
    for (int m = 1; m <= 8; ++m) {
      for (int rep = 0; rep < 3; ++rep) {
        Rng rng = Rng::ForStream(options.seed, "matroid-axioms",
                                 static_cast<std::uint64_t>(family) * 100 +
                                     m * 10 + rep);
        const Matroid matroid = RandomMatroid(family, m, rng);
        const std::uint32_t full = 1u << m;
        std::vector<int> rank(full);
        std::vector<bool> indep(full);
        for (std::uint32_t s = 0; s < full; ++s) {
          const ElementSet set = ElementSet::FromMask(s);
          rank[s] = matroid.Rank(set);
          indep[s] = matroid.IsIndependent(set);
          rank_consistent.Record(
              indep[s] == (rank[s] == std::popcount(s)) ? 0.0 : -1.0);
        }
        empty.Record(indep[0] ? 0.0 : -1.0);
        for (std::uint32_t s = 0; s < full; ++s) {
          for (int e = 0; e < m; ++e) {
            const std::uint32_t bit = 1u << e;
            if (s & bit) continue;
            const int step = rank[s | bit] - rank[s];
            monotone.Record(step == 0 || step == 1 ? 0.0 : -1.0);
            if (indep[s | bit]) hereditary.Record(indep[s] ? 0.0 : -1.0);
          }
        }
        for (std::uint32_t a = 0; a < full; ++a) {
          for (std::uint32_t b = a; b < full; ++b) {
            submodular.Record(rank[a] + rank[b] - rank[a | b] - rank[a & b]);
            if (!indep[a] || !indep[b]) continue;
            if (std::popcount(a) >= std::popcount(b)) continue;
            bool extends = false;
            for (int e = 0; e < m && !extends; ++e) {
              const std::uint32_t bit = 1u << e;
              extends = (b & bit) && !(a & bit) && indep[a | bit];
            }
            augmentation.Record(extends ? 0.0 : -1.0);
          }
        }
      }
    }
  }
  return {"matroid-axioms",
          {empty, hereditary, augmentation, rank_consistent, submodular,
           monotone}};
}

double PolytopeSlack(const Matroid& matroid, const FracPoint& x) {
  return -MostViolatedSet(matroid, x, Evaluation::kExhaustive).excess;
}

SuiteResult FractionalFeasibility(const VerifyOptions& options) {
  CheckResult x_in_p{"x-in-constraint-polytope"};
  CheckResult z_in_p{"z-in-arrival-polytope"};
  CheckResult z_below_x{"z-below-x"};
  CheckResult nonnegative{"z-nonnegative"};
  CheckResult coverage{"coverage-at-most-alpha-x"};
  for (const FractionalRun& run : FractionalRuns(options)) {
    const AlgGState& s = run.state;
    x_in_p.Record(PolytopeSlack(run.instance.constraint(), s.x()), kEpsilon);
    const std::vector<FracPoint> z = s.ZMatrix();
    for (int i = 0; i < run.instance.n(); ++i) {
      z_in_p.Record(PolytopeSlack(run.instance.arrival(i).matroid, z[i]),
                    kEpsilon);
      for (int e = 0; e < s.m(); ++e) {
        z_below_x.Record(s.x()[e] - z[i][e], kEpsilon);
        nonnegative.Record(z[i][e], kEpsilon);
      }
    }
    for (int e = 0; e < s.m(); ++e) {
      double sum = 0.0;
      for (const FracPoint& row : z) sum += row[e];
      coverage.Record(s.alpha() * s.x()[e] - sum, kEpsilon);
    }
  }
  return {"lemma4-feasibility",
          {x_in_p, z_in_p, z_below_x, nonnegative, coverage}};
}

SuiteResult CoverageBound(const VerifyOptions& options) {
  CheckResult bound{"coverage-lower-bound"};
  for (const FractionalRun& run : FractionalRuns(options)) {
    const AlgGState& s = run.state;
    const int m = s.m();
    const double floor = 1.0 / (static_cast<double>(m) * m);
    const double rate =
        s.alpha() / (options.lemma5_constant * std::log(static_cast<double>(m)));
    const std::vector<FracPoint> z = s.ZMatrix();
    for (int e = 0; e < m; ++e) {
      double sum = 0.0;
      for (const FracPoint& row : z) sum += row[e];
      bound.Record(sum - rate * (s.x()[e] - floor), kEpsilon);
    }
  }
  return {"lemma5-bound", {bound}};
}

SuiteResult UpdateRatio(const VerifyOptions& options) {
  CheckResult factor{"update-ratio-factor"};
  CheckResult large_alpha{"update-ratio-large-alpha"};
  CheckResult count{"update-count"};
  for (const FractionalRun& run : FractionalRuns(options)) {
    const AlgGState& s = run.state;
    const double ln_m = std::log(static_cast<double>(s.m()));
    const double growth = UpdateFactor(s.m(), s.alpha()) - 1.0;
    std::vector<int> updates(s.m(), 0);
    for (const UpdateRecord& u : s.trace()) {
      ++updates[u.element];
      const double ratio = u.delta() / u.x_before;
      factor.Record(growth - ratio, kEpsilon);
      if (s.alpha() >= kUpdateRate * ln_m) {
        large_alpha.Record(24.0 * ln_m / s.alpha() - ratio, kEpsilon);
      }
    }
    const int limit = static_cast<int>(std::ceil(s.alpha() / 4.0)) + 1;
    for (int c : updates) count.Record(limit - c);
  }
  return {"lemma8-ratio", {factor, large_alpha, count}};
}

SuiteResult RoundingSize(const VerifyOptions& options) {
  CheckResult mean_size{"mean-F-size"};
  const Instance instance = FixedRoundingInstance(options.seed);
  const double alphas[] = {1.0, 2.0, 4.0, 8.0};
  for (double alpha : alphas) {
    const AlgGState state = RunAlgG(instance, alpha);
    double x_sum = 0.0;
    for (double v : state.x()) x_sum += v;
    double sum = 0.0;
    double sq = 0.0;
    for (int t = 0; t < options.trials; ++t) {
      Rng coins = Rng::ForStream(options.seed, "lemma7-size",
                                 static_cast<std::uint64_t>(alpha) * 1000003 +
                                     t);
      const double size =
          RoundFractionalRun(instance, state, coins).FinalSet().Size();
      sum += size;
      sq += size * size;
    }
    const double trials = options.trials;
    const double mean = sum / trials;
    const double var =
        trials > 1 ? std::max(0.0, (sq - trials * mean * mean) / (trials - 1))
                   : 0.0;
    const double se = std::sqrt(var / trials);
    mean_size.Record(mean - (x_sum / 8.0 - 3.0 * se));
  }
  return {"lemma7-size", {mean_size}};
}

// Scales a random point so that z(S) <= r(S)/2 for every S.
FracPoint HalfPolytopePoint(const Matroid& matroid, Rng& rng) {
  const int m = matroid.ground_size();
  FracPoint z(m);
  for (double& v : z) v = rng.Uniform01();
  double scale = 1.0;
  std::vector<double> sums(1u << m, 0.0);
  for (std::uint32_t mask = 1; mask < sums.size(); ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + z[low];
    if (sums[mask] > 0.0) {
      scale = std::min(scale, matroid.RankOfMask(mask) / sums[mask]);
    }
  }
  for (double& v : z) v *= scale / 2.0;
  return z;
}

// Exact Pr[e not spanned by D - e] for D drawn from z restricted to `pool`.
double ExactTossProbability(const Matroid& matroid, const FracPoint& z,
                            const std::vector<int>& pool, int e) {
  std::vector<int> others;
  for (int f : pool) {
    if (f != e) others.push_back(f);
  }
  double total = 0.0;
  for (std::uint32_t pick = 0; pick < (1u << others.size()); ++pick) {
    double p = 1.0;
    ElementSet d;
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (pick & (1u << k)) {
        p *= z[others[k]];
        d.Insert(others[k]);
      } else {
        p *= 1.0 - z[others[k]];
      }
    }
    ElementSet with = d;
    with.Insert(e);
    if (matroid.Rank(with) > matroid.Rank(d)) total += p;
  }
  return total;
}

SuiteResult CoverSize(const VerifyOptions& options) {
  CheckResult bound{"first-fit-rounds-quantile"};
  CheckResult iterations{"sequential-rounds-at-most-m"};
  CheckResult toss{"last-element-toss-probability"};
  for (int k = 0; k < 20; ++k) {
    Rng rng = Rng::ForStream(options.seed, "lemma9-cover", k);
    const int m = rng.UniformRange(4, 12);
    const int families = m <= 10 ? 4 : 3;
    const Matroid matroid = RandomMatroid(
        static_cast<MatroidFamily>(rng.UniformInt(families)), m, rng);
    const FracPoint z = HalfPolytopePoint(matroid, rng);
    const double limit = 4.0 * (std::log2(m) + std::log2(16.0)) + 2.0;
    int within = 0;
    for (int t = 0; t < options.trials; ++t) {
      const ElementSet d = SampleSet(z, rng);
      if (FirstFitCover(matroid, d).rounds <= limit) ++within;
    }
    bound.Record(static_cast<double>(within) / options.trials - 0.99);

    const std::vector<int> ascending = AscendingOrder(m);
    for (int t = 0; t < 100; ++t) {
      iterations.Record(m - SequentialRoundsCover(matroid, z, rng, ascending)
                                .rounds);
    }

    if (m <= 6) {
      const std::vector<int> order = LastElementOrder(matroid, z, rng, 4000);
      for (std::size_t len = order.size(); len > 0; --len) {
        const std::vector<int> pool(order.begin(), order.begin() + len);
        toss.Record(
            ExactTossProbability(matroid, z, pool, order[len - 1]) - 0.5,
            kEpsilon);
      }
    }
  }
  return {"lemma9-cover", {bound, iterations, toss}};
}

SuiteResult OptimumDecomposition(const VerifyOptions& options) {
  CheckResult feasible{"pieces-satisfy-restricted-lp"};
  CheckResult total{"objectives-sum-to-opt"};
  const int count = std::max(1, options.instances / 2);
  for (int k = 0; k < count; ++k) {
    Rng rng = Rng::ForStream(options.seed, "lemma3-decomposition", k);
    const int m = rng.UniformRange(2, 10);
    const int n = rng.UniformRange(1, 12);
    const Instance instance = RandomMixedInstance(m, n, rng);
    const OfflineSolution opt = BruteForceOpt(instance);
    double sum = 0.0;
    for (const Lp2Solution& piece : DecomposeOptimal(instance, opt)) {
      const ViolationReport report =
          CheckLp2(instance, piece.alpha, piece.x, piece.z);
      double worst = 0.0;
      for (const LpViolation& v : report.violations) {
        worst = std::max(worst, v.magnitude);
      }
      feasible.Record(report.Ok() ? 0.0 : -worst);
      sum += piece.objective;
    }
    total.Record(-std::abs(sum - opt.value));
  }
  return {"lemma3-decomposition", {feasible, total}};
}

SuiteResult WeightedBound(const VerifyOptions& options) {
  CheckResult bucket{"bucket-bound"};
  CheckResult scaled{"scaled-profit-below-exact"};
  for (int k = 0; k < options.instances; ++k) {
    Rng rng = Rng::ForStream(options.seed, "weighted-bound", k);
    const int m = rng.UniformRange(2, 10);
    const int n = rng.UniformRange(1, 10);
    const Instance instance = RandomMixedInstance(m, n, rng, true);
    for (int rep = 0; rep < 4; ++rep) {
      ElementSet s;
      for (int e = 0; e < m; ++e) {
        if (rng.Bernoulli(0.5)) s.Insert(e);
      }
      bucket.Record(BucketBoundSlack(instance, s), kEpsilon);
    }
    const std::uint64_t seed = rng.NextU64();
    for (bool known : {true, false}) {
      const WeightedRunResult run =
          RunWeighted(instance, known ? GuessScheme(KnownN{n})
                                      : GuessScheme(UnknownN{}),
                      known, seed);
      scaled.Record(run.exact_profit - run.scaled_profit, kEpsilon);
    }
  }
  return {"weighted-bound", {bucket, scaled}};
}

const std::map<std::string, Suite>& Registry() {
  static const auto* registry = new std::map<std::string, Suite>{
      {"matroid-axioms", MatroidAxioms},
      {"lemma4-feasibility", FractionalFeasibility},
      {"lemma5-bound", CoverageBound},
      {"lemma7-size", RoundingSize},
      {"lemma8-ratio", UpdateRatio},
      {"lemma9-cover", CoverSize},
      {"lemma3-decomposition", OptimumDecomposition},
      {"weighted-bound", WeightedBound},
  };
  return *registry;
}

}  // namespace

Instance FixedRoundingInstance(std::uint64_t seed) {
  Rng rng = Rng::ForStream(seed, "fixed-rounding-instance");
  std::vector<Matroid> arrivals;
  for (int i = 0; i < 8; ++i) {
    arrivals.push_back(RandomMatroid(MatroidFamily::kPartition, 8, rng));
  }
  return Instance::Unweighted(Matroid(UniformSpec{8, 3}), arrivals);
}

std::vector<std::string> SuiteNames() {
  return {"matroid-axioms",     "lemma4-feasibility",   "lemma5-bound",
          "lemma7-size",        "lemma8-ratio",         "lemma9-cover",
          "lemma3-decomposition", "weighted-bound"};
}

SuiteResult RunSuite(const std::string& name, const VerifyOptions& options) {
  const auto it = Registry().find(name);
  if (it == Registry().end()) {
    throw InvalidInputError("unknown suite: " + name);
  }
  return it->second(options);
}

std::vector<SuiteResult> RunVerify(const std::string& name,
                                   const VerifyOptions& options) {
  if (name != "all") return {RunSuite(name, options)};
  std::vector<SuiteResult> results;
  for (const std::string& suite : SuiteNames()) {
    results.push_back(RunSuite(suite, options));
  }
  return results;
}

void PrintSuite(const SuiteResult& suite, std::ostream& out) {
  out << (suite.passed() ? "PASS " : "FAIL ") << suite.name << '\n';
  for (const CheckResult& c : suite.checks) {
    out << "  " << std::left << std::setw(32) << c.name << " checks="
        << c.checks << " violations=" << c.violations << " worst_slack=";
    if (c.checks == 0) {
      out << "n/a";
    } else {
      out << std::setprecision(6) << c.worst_slack;
    }
    out << '\n';
  }
}

}  // namespace onlinerank
