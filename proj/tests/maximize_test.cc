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

#include "swapround/maximize.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swapround/errors.h"
#include "swapround/fixtures.h"
#include "swapround/stats.h"

namespace swapround {
namespace {

TEST(ContinuousGreedyTest, StepCounts) {
  EXPECT_EQ(ContinuousGreedySteps(1.0), 1);
  EXPECT_EQ(ContinuousGreedySteps(0.5), 2);
  EXPECT_EQ(ContinuousGreedySteps(0.3), 4);
  EXPECT_EQ(ContinuousGreedySteps(0.1), 10);
  EXPECT_EQ(ContinuousGreedySteps(0.05), 20);
}

TEST(ContinuousGreedyTest, DefaultSampleCounts) {
  EXPECT_EQ(DefaultSamplesPerEstimate(12, 0.05), 500);
  EXPECT_EQ(DefaultSamplesPerEstimate(4, 1.0), 278);
  EXPECT_EQ(DefaultSamplesPerEstimate(1, 0.5), 1);
  EXPECT_EQ(DefaultSamplesPerEstimate(12, 0.05, 40), 40);
}

TEST(ContinuousGreedyTest, SingleStepIsGreedyOnSingletons) {
  const CoverageFunction f12 = fixtures::Coverage12();
  const PartitionMatroid p12 = fixtures::Partition12();
  ValueOracle f(f12);
  CountedMatroid m(p12);
  Rng rng(1);
  const ConvexCombination x = ContinuousGreedy(f, m, 1.0, 3, rng);
  ASSERT_EQ(x.size(), 1);

  std::vector<int> order(12);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return f12.Evaluate(ElementSet{a}.members()) >
           f12.Evaluate(ElementSet{b}.members());
  });
  ElementSet expected;
  for (int v : order) {
    if (p12.IsIndependent(expected.With(v).members())) expected.Insert(v);
  }
  EXPECT_EQ(x.terms[0].basis, expected);
  EXPECT_DOUBLE_EQ(x.terms[0].beta, 1.0);
}

TEST(ContinuousGreedyTest, ModularPicksTopWeightsEveryStep) {
  const ModularFunction f6({4, 9, 1, 7, 3, 8});
  const UniformMatroid u(6, 3);
  ValueOracle f(f6);
  CountedMatroid m(u);
  Rng rng(2);
  const ConvexCombination x = ContinuousGreedy(f, m, 0.25, 5, rng);
  ASSERT_EQ(x.size(), 4);
  for (const auto& term : x.terms) {
    EXPECT_EQ(term.basis, (ElementSet{1, 3, 5}));
    EXPECT_DOUBLE_EQ(term.beta, 0.25);
  }
}

TEST(ContinuousGreedyTest, OutputIsAValidCombination) {
  const CoverageFunction f12 = fixtures::Coverage12();
  const GraphicMatroid wheel = fixtures::Wheel(6);
  ValueOracle f(f12);
  CountedMatroid m(wheel);
  Rng rng(3);
  const ConvexCombination x = ContinuousGreedy(f, m, 0.2, 20, rng);
  EXPECT_EQ(x.size(), 5);
  EXPECT_NO_THROW(x.CheckBases(wheel));
  const std::vector<double> point = x.Point(12);
  EXPECT_NEAR(std::accumulate(point.begin(), point.end(), 0.0), 6.0, 1e-9);
}

TEST(ContinuousGreedyTest, RejectsBadEpsilon) {
  const CoverageFunction f12 = fixtures::Coverage12();
  const PartitionMatroid p12 = fixtures::Partition12();
  ValueOracle f(f12);
  CountedMatroid m(p12);
  Rng rng(1);
  EXPECT_THROW(ContinuousGreedy(f, m, 0.0, 10, rng), InputError);
  EXPECT_THROW(ContinuousGreedy(f, m, 1.5, 10, rng), InputError);
  EXPECT_THROW(ContinuousGreedy(f, m, 0.5, 0, rng), InputError);
}

TEST(ContinuousGreedyTest, ReachesApproximationOnCoverageFixture) {
  const CoverageFunction f12 = fixtures::Coverage12();
  const PartitionMatroid p12 = fixtures::Partition12();
  ValueOracle f(f12);
  CountedMatroid m(p12);
  const double opt = BruteForceOpt(f, m).second;
  constexpr double kEpsilon = 0.2;
  Rng rng(4);
  RunningStats values;
  for (int run = 0; run < 30; ++run) {
    const ConvexCombination x = ContinuousGreedy(f, m, kEpsilon, 50, rng);
    values.Add(MultilinearExact(f, x.Point(12)));
  }
  const SampleSummary s = values.Summary();
  EXPECT_GE(s.mean, (1 - 1 / std::exp(1.0) - kEpsilon) * opt -
                        3 * s.standard_error);
}

TEST(MaximizeTest, ModularOnUniformReturnsTopWeights) {
  const ModularFunction f({1, 5, 3, 4});
  const UniformMatroid u(4, 2);
  Rng rng(5);
  const MaximizeResult result = Maximize(f, u, 0.1, {}, rng);
  EXPECT_EQ(result.solution, (ElementSet{1, 3}));
  EXPECT_EQ(result.value, 9.0);
}

TEST(MaximizeTest, ReportAccounting) {
  const CoverageFunction f12 = fixtures::Coverage12();
  const PartitionMatroid p12 = fixtures::Partition12();
  MaximizeConfig config;
  config.samples_per_estimate = 20;
  Rng rng(6);
  const MaximizeResult result = Maximize(f12, p12, 0.3, config, rng);
  EXPECT_EQ(result.term_count, 7);
  EXPECT_EQ(result.samples_per_estimate, 20);
  EXPECT_EQ(result.value, f12.Evaluate(result.solution.members()));
  EXPECT_TRUE(p12.IsIndependent(result.solution.members()));
  EXPECT_EQ(result.solution.size(), 5);

  ASSERT_EQ(result.phases.size(), 3u);
  QueryCounts sum;
  for (const auto& [name, counts] : result.phases) sum += counts;
  EXPECT_EQ(sum, result.totals);
  EXPECT_EQ(result.phases.at("evaluation"), (QueryCounts{0, 0, 1}));
  EXPECT_EQ(result.phases.at("rounding").value, 0);
  EXPECT_GT(result.phases.at("relaxation").value, 0);
}

TEST(MaximizeTest, TermCountIsTwoOverEpsilon) {
  const ModularFunction f({1, 5, 3, 4});
  const UniformMatroid u(4, 2);
  MaximizeConfig config;
  config.samples_per_estimate = 2;
  for (double eps : {0.1, 0.25, 0.4, 0.9}) {
    Rng rng(7);
    EXPECT_EQ(Maximize(f, u, eps, config, rng).term_count,
              static_cast<int>(std::ceil(2 / eps - 1e-9)))
        << eps;
  }
}

TEST(MaximizeTest, SameSeedSameResult) {
  const CoverageFunction f12 = fixtures::Coverage12();
  const PartitionMatroid p12 = fixtures::Partition12();
  MaximizeConfig config;
  config.samples_per_estimate = 10;
  Rng a(8);
  Rng b(8);
  const MaximizeResult ra = Maximize(f12, p12, 0.2, config, a);
  const MaximizeResult rb = Maximize(f12, p12, 0.2, config, b);
  EXPECT_EQ(ra.solution, rb.solution);
  EXPECT_EQ(ra.totals, rb.totals);
}

TEST(MaximizeTest, RejectsBadConfig) {
  const ModularFunction f({1, 5, 3, 4});
  const UniformMatroid u(4, 2);
  const UniformMatroid u5(5, 2);
  Rng rng(1);
  EXPECT_THROW(Maximize(f, u, 1.0, {}, rng), InputError);
  EXPECT_THROW(Maximize(f, u, 0.0, {}, rng), InputError);
  EXPECT_THROW(Maximize(f, u5, 0.1, {}, rng), InputError);
  MaximizeConfig bad;
  bad.relaxation_share = 1.0;
  EXPECT_THROW(Maximize(f, u, 0.1, bad, rng), InputError);
}

}  // namespace
}  // namespace swapround
