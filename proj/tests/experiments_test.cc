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

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>

namespace swapround {
namespace {

ScalingConfig SmallGrid() {
  ScalingConfig config;
  config.r_grid = {4, 8, 16};
  config.t = 3;
  config.trials = 2;
  config.seed = 5;
  return config;
}

TEST(ScalingBenchmarkTest, OneRecordPerRankAlgorithmAndTrial) {
  const ScalingResult result = RunScalingBenchmark(SmallGrid());
  ASSERT_EQ(result.records.size(), 3u * 2u * 2u);
  for (const ScalingRecord& rec : result.records) {
    EXPECT_GT(rec.independence_queries, 0);
    EXPECT_GE(rec.wall_time_ns, 0);
    EXPECT_EQ(rec.t, 3);
  }
  EXPECT_EQ(result.slope.count("classic"), 1u);
  EXPECT_EQ(result.slope.count("fast"), 1u);
  EXPECT_EQ(result.median.at("fast").size(), 3u);
}

TEST(ScalingBenchmarkTest, QueryCountsAreDeterministic) {
  const ScalingResult a = RunScalingBenchmark(SmallGrid());
  const ScalingResult b = RunScalingBenchmark(SmallGrid());
  ASSERT_EQ(a.records.size(), b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].independence_queries,
              b.records[i].independence_queries);
  }
  EXPECT_EQ(a.slope, b.slope);
}

TEST(ScalingBenchmarkTest, SingleTermDoesNoWork) {
  ScalingConfig config = SmallGrid();
  config.t = 1;
  const ScalingResult result = RunScalingBenchmark(config);
  for (const ScalingRecord& rec : result.records) {
    EXPECT_EQ(rec.independence_queries, 0);
  }
  EXPECT_TRUE(result.slope.empty());
}

TEST(ScalingBenchmarkTest, RejectsBadGrids) {
  ScalingConfig config = SmallGrid();
  config.r_grid = {4, 8};
  EXPECT_THROW(RunScalingBenchmark(config), ConfigError);
  config.r_grid = {4, 8, 8};
  EXPECT_THROW(RunScalingBenchmark(config), ConfigError);
  config.r_grid = {0, 8, 16};
  EXPECT_THROW(RunScalingBenchmark(config), ConfigError);
  config = SmallGrid();
  config.trials = 0;
  EXPECT_THROW(RunScalingBenchmark(config), ConfigError);
}

TEST(ScalingBenchmarkTest, CsvLayout) {
  const ScalingResult result = RunScalingBenchmark(SmallGrid());
  std::ostringstream out;
  WriteScalingCsv(result, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# schema=swapround.scaling.v1");
  std::getline(in, line);
  EXPECT_EQ(line, "r,t,algorithm,trial,independence_queries,wall_time_ns");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("4,3,classic,0,", 0), 0u) << line;
  int rows = 0;
  int slopes = 0;
  do {
    if (line.rfind("# slope,", 0) == 0) {
      ++slopes;
    } else {
      ++rows;
    }
  } while (std::getline(in, line));
  EXPECT_EQ(rows, 12);
  EXPECT_EQ(slopes, 2);
}

TEST(VerifySuiteTest, AllSuitesPassAtSmallScale) {
  for (const std::string& suite : VerifySuiteNames()) {
    const VerifyReport report = RunVerifySuite(suite, 2000, 3);
    EXPECT_TRUE(report.pass()) << report.ToJson().dump(2);
    const nlohmann::json doc = report.ToJson();
    EXPECT_EQ(doc["schema"], "swapround.verify.v1");
    EXPECT_EQ(doc["verdict"], "pass");
    EXPECT_EQ(doc["checks"].size(), report.checks.size());
  }
}

TEST(VerifySuiteTest, MartingaleCoversSeveralCycleLengths) {
  const VerifyReport report = RunVerifySuite("martingale", 50, 1);
  std::set<std::string> lengths;
  for (const CheckResult& check : report.checks) {
    lengths.insert(check.name.substr(0, check.name.find(' ')));
  }
  EXPECT_GE(lengths.size(), 3u);
}

TEST(VerifySuiteTest, RejectsUnknownSuiteAndBadTrials) {
  EXPECT_THROW(RunVerifySuite("pipage", 10, 1), ConfigError);
  EXPECT_THROW(RunVerifySuite("martingale", 0, 1), ConfigError);
}

TEST(SolveReportTest, Fields) {
  MaximizeResult result;
  result.solution = {1, 3};
  result.value = 9.0;
  result.term_count = 20;
  result.totals = {5, 0, 7};
  result.phases["rounding"] = {5, 0, 0};
  result.phases["relaxation"] = {0, 0, 7};
  const nlohmann::json doc =
      SolveReportJson(result, {"a", "b", "c", "d"}, 0.1, 42);
  EXPECT_EQ(doc["schema"], "swapround.solve.v1");
  EXPECT_EQ(doc["solution"], nlohmann::json::array({1, 3}));
  EXPECT_EQ(doc["solution_labels"], nlohmann::json::array({"b", "d"}));
  EXPECT_EQ(doc["value"], 9.0);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["queries"]["total"]["value"], 7);
  EXPECT_EQ(doc["queries"]["phases"]["rounding"]["independence"], 5);
}

}  // namespace
}  // namespace swapround
