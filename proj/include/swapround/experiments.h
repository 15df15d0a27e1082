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

#ifndef SWAPROUND_EXPERIMENTS_H_
#define SWAPROUND_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "swapround/errors.h"
#include "swapround/fast_swap_round.h"
#include "swapround/maximize.h"
#include "swapround/submodular.h"

namespace swapround {

inline constexpr std::string_view kScalingSchema = "swapround.scaling.v1";
inline constexpr std::string_view kVerifySchema = "swapround.verify.v1";
inline constexpr std::string_view kSolveSchema = "swapround.solve.v1";

// Experiment parameters that are valid syntax but cannot be run.
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

struct ScalingRecord {
  int r = 0;
  int t = 0;
  std::string algorithm;  // "classic" or "fast"
  int trial = 0;
  std::int64_t independence_queries = 0;
  std::int64_t wall_time_ns = 0;
};

struct ScalingConfig {
  std::vector<int> r_grid{50, 100, 200, 400};
  int t = 4;
  int trials = 20;
  std::uint64_t seed = 1;
  CycleSearch cycle_search = CycleSearch::kPredecessorWalk;
};

struct ScalingResult {
  std::vector<ScalingRecord> records;
  // Least-squares log-log slope of queries against r, over all records with
  // positive counts. Empty when the grid yields no merge work (t = 1).
  std::map<std::string, double> slope;
  // Median query count per algorithm and rank.
  std::map<std::string, std::map<int, double>> median;
};

// For every r in the grid and every trial: draws t independent random
// spanning trees of K_{r+1}, rounds their equal-weight combination with
// SwapRound and FastSwapRound, and records independence queries. Throws
// ConfigError for a grid with fewer than 3 points, a non-increasing grid,
// r < 1, t < 1 or trials < 1.
ScalingResult RunScalingBenchmark(const ScalingConfig& config);

// CSV with a schema comment, the header
// r,t,algorithm,trial,independence_queries,wall_time_ns, one row per record,
// and trailing "# slope,<algorithm>,<value>" summary lines.
void WriteScalingCsv(const ScalingResult& result, std::ostream& out);

struct CheckResult {
  std::string name;
  double statistic = 0.0;  // z-score, or the relevant count/ratio
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
  nlohmann::json ToJson() const;
};

// Suites: "martingale", "marginals", "rounding-guarantee", "cycle-validity".
const std::vector<std::string>& VerifySuiteNames();

// Runs one statistical verification suite. Throws ConfigError for an
// unknown suite name or trials < 1.
VerifyReport RunVerifySuite(std::string_view suite, int trials,
                            std::uint64_t seed);

// Deterministic JSON report for `solve`.
nlohmann::json SolveReportJson(const MaximizeResult& result,
                               const std::vector<std::string>& labels,
                               double epsilon, std::uint64_t seed);

}  // namespace swapround

#endif  // SWAPROUND_EXPERIMENTS_H_
