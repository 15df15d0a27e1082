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

// Command-line driver: solve, bench-scaling and verify.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swapround/errors.h"
#include "swapround/experiments.h"
#include "swapround/instance_io.h"
#include "swapround/maximize.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

constexpr char kBudgetEnv[] = "SWAPROUND_BUDGET_CONSTANT";
constexpr char kSamplesEnv[] = "SWAPROUND_SAMPLES_PER_ESTIMATE";

std::optional<double> EnvNumber(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size()) {
    throw swapround::InputError(std::string(name) + " is not a number: " +
                                raw);
  }
  return value;
}

swapround::MaximizeConfig ConfigFromEnv() {
  swapround::MaximizeConfig config;
  if (auto c = EnvNumber(kBudgetEnv)) {
    if (!(*c > 0.0)) throw swapround::ConfigError("budget constant must be > 0");
    config.budget_constant = *c;
  }
  if (auto s = EnvNumber(kSamplesEnv)) {
    if (*s < 1.0 || *s != static_cast<int>(*s)) {
      throw swapround::ConfigError(
          "samples per estimate must be a positive integer");
    }
    config.samples_per_estimate = static_cast<int>(*s);
  }
  return config;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw swapround::InputError("cannot write " + path);
  out << text;
}

struct SolveOptions {
  std::string matroid;
  std::string objective;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  std::string out;
};

int RunSolve(const SolveOptions& opt) {
  swapround::MaximizeConfig config = ConfigFromEnv();
  swapround::MatroidInstance instance = swapround::LoadMatroid(opt.matroid);
  const int n = instance.matroid->ground_size();
  auto f = swapround::LoadObjective(opt.objective, n);
  if (f->ground_size() != n) {
    throw swapround::ConfigError(
        "objective has " + std::to_string(f->ground_size()) +
        " elements but the matroid has " + std::to_string(n));
  }
  if (!(opt.epsilon > 0.0 && opt.epsilon < 1.0)) {
    throw swapround::ConfigError("epsilon must lie in (0, 1)");
  }
  swapround::Rng rng(opt.seed);
  const swapround::MaximizeResult result =
      swapround::Maximize(*f, *instance.matroid, opt.epsilon, config, rng);
  const nlohmann::json report = swapround::SolveReportJson(
      result, instance.labels, opt.epsilon, opt.seed);
  WriteText(opt.out, report.dump(2) + "\n");
  return kExitOk;
}

struct BenchOptions {
  std::vector<int> r_grid{50, 100, 200, 400};
  int t = 4;
  int trials = 20;
  std::uint64_t seed = 1;
  std::string cycle_search = "walk";
  std::string out;
};

int RunBench(const BenchOptions& opt) {
  swapround::ScalingConfig config;
  config.r_grid = opt.r_grid;
  config.t = opt.t;
  config.trials = opt.trials;
  config.seed = opt.seed;
  config.cycle_search = opt.cycle_search == "full"
                            ? swapround::CycleSearch::kFullSample
                            : swapround::CycleSearch::kPredecessorWalk;
  const swapround::ScalingResult result =
      swapround::RunScalingBenchmark(config);
  std::ostringstream csv;
  swapround::WriteScalingCsv(result, csv);
  WriteText(opt.out, csv.str());
  for (const auto& [algorithm, slope] : result.slope) {
    std::cerr << algorithm << " slope " << slope << '\n';
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string suite;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string out;
};

int RunVerify(const VerifyOptions& opt) {
  const auto& names = swapround::VerifySuiteNames();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end()) {
    throw swapround::InputError("unknown suite \"" + opt.suite + "\"");
  }
  const swapround::VerifyReport report =
      swapround::RunVerifySuite(opt.suite, opt.trials, opt.seed);
  WriteText(opt.out, report.ToJson().dump(2) + "\n");
  return report.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization with matroid swap rounding"};
  app.require_subcommand(1);

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Maximize f over a matroid");
  solve_cmd->add_option("--matroid", solve.matroid, "Matroid JSON")->required();
  solve_cmd->add_option("--objective", solve.objective, "Objective JSON")
      ->required();
  solve_cmd->add_option("--epsilon", solve.epsilon, "Accuracy in (0, 1)");
  solve_cmd->add_option("--seed", solve.seed, "RNG seed");
  solve_cmd->add_option("--out", solve.out, "Report path (default stdout)");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench-scaling", "Count independence queries on complete graphs");
  bench_cmd->add_option("--r-grid", bench.r_grid, "Ranks, comma separated")
      ->delimiter(',');
  bench_cmd->add_option("--t", bench.t, "Bases per combination");
  bench_cmd->add_option("--trials", bench.trials, "Trials per rank");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--cycle-search", bench.cycle_search,
                        "Cycle finder for the fast rounding")
      ->check(CLI::IsMember({"walk", "full"}));
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a statistical verification suite");
  verify_cmd->add_option("--suite", verify.suite, "Suite name")->required();
  verify_cmd->add_option("--trials", verify.trials, "Trials");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--out", verify.out, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*bench_cmd) return RunBench(bench);
    return RunVerify(verify);
  } catch (const swapround::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const swapround::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
