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

#include "swapround/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "swapround/fixtures.h"
#include "swapround/stats.h"
#include "swapround/swap_round.h"

namespace swapround {
namespace {

using nlohmann::json;

constexpr double kZLimit = 3.0;
// This K6 basis pair has exchange cycles of every length from 2 to 10.
constexpr std::uint64_t kMartingalePairSeed = 16;

std::uint64_t TrialIndex(int r, int trial) {
  return (static_cast<std::uint64_t>(r) << 32) |
         static_cast<std::uint32_t>(trial);
}

std::string FormatDouble(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

// Adjacency of the full exchange digraph, computed with the raw oracle.
std::map<int, std::vector<int>> FullDigraph(const Matroid& m,
                                            const ElementSet& b1,
                                            const ElementSet& b2) {
  std::map<int, std::vector<int>> out;
  const ElementSet left = b1.Minus(b2);
  const ElementSet right = b2.Minus(b1);
  for (int u : left) {
    for (int v : right) {
      if (m.IsIndependent(b1.Swap(u, v).members())) out[u].push_back(v);
      if (m.IsIndependent(b2.Swap(v, u).members())) out[v].push_back(u);
    }
  }
  return out;
}

// Depth-first search for a simple cycle through some left vertex with
// exactly `half_length` left vertices.
std::optional<DirectedCycle> CycleOfHalfLength(
    const std::map<int, std::vector<int>>& adjacency, const ElementSet& left,
    int half_length) {
  std::vector<int> path;
  std::function<bool(int, int)> dfs = [&](int start, int x) -> bool {
    for (int y : adjacency.count(x) ? adjacency.at(x) : std::vector<int>{}) {
      if (y == start && static_cast<int>(path.size()) == 2 * half_length) {
        return true;
      }
      if (std::find(path.begin(), path.end(), y) != path.end()) continue;
      if (static_cast<int>(path.size()) >= 2 * half_length) continue;
      path.push_back(y);
      if (dfs(start, y)) return true;
      path.pop_back();
    }
    return false;
  };
  for (int start : left) {
    path = {start};
    if (dfs(start, start)) {
      DirectedCycle cycle;
      for (size_t i = 0; i < path.size(); i += 2) {
        cycle.u.push_back(path[i]);
        cycle.v.push_back(path[i + 1]);
      }
      return cycle;
    }
  }
  return std::nullopt;
}

void MartingaleSuite(VerifyReport& report) {
  constexpr double kBeta1 = 0.3;
  constexpr double kBeta2 = 0.7;
  const GraphicMatroid k6 = GraphicMatroid::Complete(6);
  const int n = k6.ground_size();
  const auto bases = fixtures::DistinctRandomBases(k6, 2, kMartingalePairSeed);
  const ElementSet& b1 = bases[0];
  const ElementSet& b2 = bases[1];
  const auto adjacency = FullDigraph(k6, b1, b2);
  std::vector<double> expected(n, 0.0);
  for (int v : b1) expected[v] += kBeta1;
  for (int v : b2) expected[v] += kBeta2;

  Rng rng(report.seed);
  const int max_half = b1.Minus(b2).size();
  for (int l = 1; l <= max_half; ++l) {
    std::optional<DirectedCycle> cycle =
        CycleOfHalfLength(adjacency, b1.Minus(b2), l);
    if (!cycle) continue;
    std::vector<RunningStats> coords(n);
    for (int trial = 0; trial < report.trials; ++trial) {
      auto [c1, c2] = UpdateWithCycle(kBeta1, b1, kBeta2, b2, *cycle, rng);
      std::vector<double> y(n, 0.0);
      for (int v : c1) y[v] += kBeta1;
      for (int v : c2) y[v] += kBeta2;
      for (int v = 0; v < n; ++v) coords[v].Add(y[v]);
    }
    for (int v = 0; v < n; ++v) {
      const SampleSummary s = coords[v].Summary();
      const double z = ZScore(s.mean, expected[v], s.standard_error);
      report.checks.push_back(
          {"cycle_length=" + std::to_string(2 * l) + " element=" +
               std::to_string(v),
           z, std::abs(z) <= kZLimit,
           "mean " + FormatDouble(s.mean) + " vs " +
               FormatDouble(expected[v])});
    }
  }
}

// Per-element inclusion frequency of a rounding routine against x.
void MarginalChecks(VerifyReport& report, const std::string& label,
                    const Matroid& m, const ConvexCombination& x,
                    const std::function<ElementSet(const CountedMatroid&,
                                                   Rng&)>& round,
                    Rng& rng) {
  const int n = m.ground_size();
  const std::vector<double> point = x.Point(n);
  std::vector<long> hits(n, 0);
  CountedMatroid counted(m);
  for (int trial = 0; trial < report.trials; ++trial) {
    for (int v : round(counted, rng)) ++hits[v];
  }
  for (int v = 0; v < n; ++v) {
    const double freq = static_cast<double>(hits[v]) / report.trials;
    const double xv = std::clamp(point[v], 0.0, 1.0);
    const double se = std::sqrt(xv * (1.0 - xv) / report.trials);
    const double z = ZScore(freq, xv, se);
    report.checks.push_back({label + " element=" + std::to_string(v), z,
                             std::abs(z) <= kZLimit,
                             "frequency " + FormatDouble(freq) + " vs x=" +
                                 FormatDouble(xv)});
  }
}

void MarginalsSuite(VerifyReport& report) {
  Rng rng(report.seed);
  const GraphicMatroid triangle = fixtures::Triangle();
  const auto half = ConvexCombination::Uniform({{0, 1}, {1, 2}});
  const GraphicMatroid wheel = fixtures::Wheel(6);
  const auto mixed =
      ConvexCombination::Uniform(fixtures::DistinctRandomBases(wheel, 4, 2024));
  auto classic = [](const ConvexCombination& x) {
    return [&x](const CountedMatroid& m, Rng& r) { return SwapRound(x, m, r); };
  };
  auto fast = [](const ConvexCombination& x) {
    return [&x](const CountedMatroid& m, Rng& r) {
      return FastSwapRound(x, m, r);
    };
  };
  MarginalChecks(report, "classic triangle", triangle, half, classic(half),
                 rng);
  MarginalChecks(report, "fast triangle", triangle, half, fast(half), rng);
  MarginalChecks(report, "classic wheel", wheel, mixed, classic(mixed), rng);
  MarginalChecks(report, "fast wheel", wheel, mixed, fast(mixed), rng);
}

void RoundingGuaranteeSuite(VerifyReport& report) {
  const CoverageFunction f = fixtures::Coverage12();
  const GraphicMatroid wheel = fixtures::Wheel(6);
  const auto x =
      ConvexCombination::Uniform(fixtures::DistinctRandomBases(wheel, 4, 2024));
  ValueOracle oracle(f);
  const double exact = MultilinearExact(oracle, x.Point(f.ground_size()));
  Rng rng(report.seed);
  CountedMatroid m(wheel);
  for (const char* name : {"classic", "fast"}) {
    RunningStats values;
    for (int trial = 0; trial < report.trials; ++trial) {
      const ElementSet s = std::string(name) == "classic"
                               ? SwapRound(x, m, rng)
                               : FastSwapRound(x, m, rng);
      values.Add(oracle.Value(s));
    }
    const SampleSummary s = values.Summary();
    const double z = ZScore(s.mean, exact, s.standard_error);
    report.checks.push_back(
        {std::string(name) + " E[f(S)] >= F(x)", z, z >= -kZLimit,
         "mean " + FormatDouble(s.mean) + " vs F(x)=" + FormatDouble(exact)});
  }
}

void CycleValiditySuite(VerifyReport& report) {
  const GraphicMatroid k8 = GraphicMatroid::Complete(8);
  Rng rng(report.seed);
  for (CycleSearch strategy :
       {CycleSearch::kPredecessorWalk, CycleSearch::kFullSample}) {
    CountedMatroid m(k8);
    int failures = 0;
    for (int trial = 0; trial < report.trials; ++trial) {
      ElementSet b1 = RandomBasis(m, rng);
      ElementSet b2 = RandomBasis(m, rng);
      while (b2 == b1) b2 = RandomBasis(m, rng);
      ExchangeDigraph graph(m, b1, b2);
      const DirectedCycle cycle = FindDirectedCycle(graph, 4, rng, strategy);
      if (!ValidateCycle(graph, cycle)) ++failures;
    }
    const std::string label = strategy == CycleSearch::kPredecessorWalk
                                  ? "predecessor-walk"
                                  : "full-sample";
    report.checks.push_back({label + " invalid cycles", double(failures),
                             failures == 0,
                             std::to_string(failures) + " of " +
                                 std::to_string(report.trials)});
  }
}

}  // namespace

ScalingResult RunScalingBenchmark(const ScalingConfig& config) {
  if (config.r_grid.size() < 3) {
    throw ConfigError("rank grid needs at least 3 points to fit a slope");
  }
  for (size_t i = 0; i < config.r_grid.size(); ++i) {
    if (config.r_grid[i] < 1) throw ConfigError("ranks must be >= 1");
    if (i > 0 && config.r_grid[i] <= config.r_grid[i - 1]) {
      throw ConfigError("rank grid must be strictly increasing");
    }
  }
  if (config.t < 1) throw ConfigError("t must be >= 1");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");

  using Clock = std::chrono::steady_clock;
  ScalingResult result;
  for (int r : config.r_grid) {
    const GraphicMatroid graph = GraphicMatroid::Complete(r + 1);
    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t index = TrialIndex(r, trial);
      Rng setup = TrialRng(config.seed, index);
      CountedMatroid scratch(graph);
      std::vector<ElementSet> bases;
      for (int i = 0; i < config.t; ++i) {
        bases.push_back(RandomBasis(scratch, setup));
      }
      const auto x = ConvexCombination::Uniform(std::move(bases));

      for (const char* algorithm : {"classic", "fast"}) {
        const bool classic = std::string(algorithm) == "classic";
        CountedMatroid m(graph);
        Rng rng = TrialRng(config.seed + (classic ? 1 : 2), index);
        const auto start = Clock::now();
        if (classic) {
          SwapRound(x, m, rng);
        } else {
          FastSwapRound(x, m, rng, config.cycle_search);
        }
        const auto elapsed = Clock::now() - start;
        result.records.push_back(
            {r, config.t, algorithm, trial, m.ledger().independence_queries(),
             std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)
                 .count()});
      }
    }
  }

  for (const char* algorithm : {"classic", "fast"}) {
    std::vector<double> rs;
    std::vector<double> qs;
    std::map<int, std::vector<double>> by_rank;
    for (const ScalingRecord& rec : result.records) {
      if (rec.algorithm != algorithm) continue;
      by_rank[rec.r].push_back(rec.independence_queries);
      if (rec.independence_queries > 0) {
        rs.push_back(rec.r);
        qs.push_back(rec.independence_queries);
      }
    }
    for (auto& [r, values] : by_rank) {
      result.median[algorithm][r] = Median(values);
    }
    if (std::set<double>(rs.begin(), rs.end()).size() >= 2) {
      result.slope[algorithm] = LogLogSlope(rs, qs);
    }
  }
  return result;
}

void WriteScalingCsv(const ScalingResult& result, std::ostream& out) {
  out << "# schema=" << kScalingSchema << '\n';
  out << "r,t,algorithm,trial,independence_queries,wall_time_ns\n";
  for (const ScalingRecord& rec : result.records) {
    out << rec.r << ',' << rec.t << ',' << rec.algorithm << ',' << rec.trial
        << ',' << rec.independence_queries << ',' << rec.wall_time_ns << '\n';
  }
  for (const auto& [algorithm, slope] : result.slope) {
    out << "# slope," << algorithm << ',' << FormatDouble(slope) << '\n';
  }
}

bool VerifyReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

json VerifyReport::ToJson() const {
  json doc;
  doc["schema"] = kVerifySchema;
  doc["suite"] = suite;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["checks"] = json::array();
  for (const CheckResult& c : checks) {
    json check = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    // JSON has no infinities.
    if (std::isfinite(c.statistic)) {
      check["statistic"] = c.statistic;
    } else {
      check["statistic"] = c.statistic > 0 ? "inf" : "-inf";
    }
    doc["checks"].push_back(std::move(check));
  }
  doc["verdict"] = pass() ? "pass" : "fail";
  return doc;
}

const std::vector<std::string>& VerifySuiteNames() {
  static const std::vector<std::string> names = {
      "martingale", "marginals", "rounding-guarantee", "cycle-validity"};
  return names;
}

VerifyReport RunVerifySuite(std::string_view suite, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  VerifyReport report;
  report.suite = suite;
  report.trials = trials;
  report.seed = seed;
  if (suite == "martingale") {
    MartingaleSuite(report);
  } else if (suite == "marginals") {
    MarginalsSuite(report);
  } else if (suite == "rounding-guarantee") {
    RoundingGuaranteeSuite(report);
  } else if (suite == "cycle-validity") {
    CycleValiditySuite(report);
  } else {
    throw ConfigError("unknown suite \"" + std::string(suite) + "\"");
  }
  return report;
}

json SolveReportJson(const MaximizeResult& result,
                     const std::vector<std::string>& labels, double epsilon,
                     std::uint64_t seed) {
  auto counts = [](const QueryCounts& c) {
    return json{{"independence", c.independence},
                {"rank", c.rank},
                {"value", c.value}};
  };
  json doc;
  doc["schema"] = kSolveSchema;
  doc["seed"] = seed;
  doc["epsilon"] = epsilon;
  doc["solution"] = std::vector<int>(result.solution.begin(),
                                     result.solution.end());
  if (!labels.empty()) {
    json names = json::array();
    for (int v : result.solution) names.push_back(labels[v]);
    doc["solution_labels"] = std::move(names);
  }
  doc["value"] = result.value;
  doc["term_count"] = result.term_count;
  doc["samples_per_estimate"] = result.samples_per_estimate;
  doc["rounding"] = {{"attempts", result.rounding.attempts},
                     {"fell_back", result.rounding.fell_back},
                     {"budget", result.rounding.budget}};
  doc["queries"]["total"] = counts(result.totals);
  for (const auto& [phase, c] : result.phases) {
    doc["queries"]["phases"][phase] = counts(c);
  }
  return doc;
}

}  // namespace swapround
