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

#include "swapround/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "swapround/errors.h"

namespace swapround {
namespace {

TEST(RunningStatsTest, MeanAndStandardError) {
  RunningStats s;
  for (double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) s.Add(x);
  const SampleSummary summary = s.Summary();
  EXPECT_EQ(summary.count, 8);
  EXPECT_DOUBLE_EQ(summary.mean, 5.0);
  // Sample variance 32 / 7.
  EXPECT_NEAR(summary.standard_error, std::sqrt(32.0 / 7.0 / 8.0), 1e-12);
}

TEST(RunningStatsTest, SingleSampleHasNoSpread) {
  RunningStats s;
  s.Add(3.0);
  EXPECT_EQ(s.Summary().standard_error, 0.0);
}

TEST(ZScoreTest, ZeroStandardError) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(ZScore(1.0, 1.0, 0.0), 0.0);
  EXPECT_EQ(ZScore(2.0, 1.0, 0.0), inf);
  EXPECT_EQ(ZScore(0.0, 1.0, 0.0), -inf);
  EXPECT_DOUBLE_EQ(ZScore(1.3, 1.0, 0.1), 3.0);
}

TEST(LogLogSlopeTest, RecoversPowerLaw) {
  const std::vector<double> x{50, 100, 200, 400};
  std::vector<double> y;
  for (double r : x) y.push_back(0.2 * r * r);
  EXPECT_NEAR(LogLogSlope(x, y), 2.0, 1e-12);
  y.clear();
  for (double r : x) y.push_back(3 * std::pow(r, 1.5));
  EXPECT_NEAR(LogLogSlope(x, y), 1.5, 1e-12);
}

TEST(LogLogSlopeTest, RejectsDegenerateInput) {
  EXPECT_THROW(LogLogSlope(std::vector<double>{1}, std::vector<double>{1}),
               InputError);
  EXPECT_THROW(LogLogSlope(std::vector<double>{2, 2}, std::vector<double>{1, 3}),
               InputError);
  EXPECT_THROW(LogLogSlope(std::vector<double>{1, 2}, std::vector<double>{0, 3}),
               InputError);
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_EQ(Median({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(Median({}), InputError);
}

}  // namespace
}  // namespace swapround
