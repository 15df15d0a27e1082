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

#include "swapround/swap_round.h"

#include <gtest/gtest.h>

#include <map>

#include "swapround/errors.h"
#include "swapround/fixtures.h"

namespace swapround {
namespace {

TEST(UpdateViaStrongBasisExchangeTest, ZeroSecondWeightAlwaysMovesB2) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto [b1, b2] = UpdateViaStrongBasisExchange(1.0, {0, 1}, 0.0, {1, 2},
                                                 {0, 2}, rng);
    EXPECT_EQ(b1, (ElementSet{0, 1}));
    EXPECT_EQ(b2, (ElementSet{0, 1}));
  }
}

TEST(UpdateViaStrongBasisExchangeTest, HeadsMergesTriangle) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto [b1, b2] = UpdateViaStrongBasisExchange(0.0, {0, 1}, 1.0, {1, 2},
                                                 {0, 2}, rng);
    EXPECT_EQ(b1, (ElementSet{1, 2}));
    EXPECT_EQ(b1, b2);
  }
}

TEST(UpdateViaStrongBasisExchangeTest, FairCoinFrequencies) {
  Rng rng(9);
  int first = 0;
  constexpr int kTrials = 20000;
  for (int i = 0; i < kTrials; ++i) {
    auto [b1, b2] = UpdateViaStrongBasisExchange(0.5, {0, 1}, 0.5, {1, 2},
                                                 {0, 2}, rng);
    if (b1 != (ElementSet{0, 1})) ++first;
  }
  EXPECT_NEAR(static_cast<double>(first) / kTrials, 0.5, 0.02);
}

TEST(UpdateViaStrongBasisExchangeTest, RejectsPairOutsideDifference) {
  Rng rng(1);
  EXPECT_THROW(UpdateViaStrongBasisExchange(0.5, {0, 1}, 0.5, {1, 2}, {1, 2},
                                            rng),
               InputError);
}

TEST(MergeBasesTest, EqualBasesCostNothing) {
  const GraphicMatroid k5 = GraphicMatroid::Complete(5);
  CountedMatroid m(k5);
  Rng rng(1);
  EXPECT_EQ(MergeBases(0.5, {0, 1, 2, 3}, 0.5, {0, 1, 2, 3}, m, rng),
            (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(m.ledger().Totals().total(), 0);
}

TEST(MergeBasesTest, TriangleReachesOnlyTheInputs) {
  const GraphicMatroid triangle = fixtures::Triangle();
  CountedMatroid m(triangle);
  Rng rng(4);
  std::map<ElementSet, int> seen;
  for (int i = 0; i < 500; ++i) {
    ++seen[MergeBases(0.5, {0, 1}, 0.5, {1, 2}, m, rng)];
  }
  EXPECT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen.count(ElementSet{0, 2}), 0u);
}

TEST(MergeBasesTest, OneRoundPerDifferingPair) {
  // In U(6,3) the first candidate v always works, so a round costs two
  // independence queries and rounds can be read off the count.
  const UniformMatroid u(6, 3);
  for (int k = 1; k <= 3; ++k) {
    CountedMatroid m(u);
    Rng rng(k);
    ElementSet b1{0, 1, 2};
    ElementSet b2 = b1;
    for (int i = 0; i < k; ++i) b2 = b2.Swap(i, 3 + i);
    MergeBases(0.5, b1, 0.5, b2, m, rng);
    EXPECT_EQ(m.ledger().independence_queries(), 2 * k);
  }
}

TEST(SwapRoundTest, SingleTermIsFree) {
  const GraphicMatroid k4 = GraphicMatroid::Complete(4);
  CountedMatroid m(k4);
  Rng rng(1);
  EXPECT_EQ(SwapRound(ConvexCombination::Uniform({{0, 1, 2}}), m, rng),
            (ElementSet{0, 1, 2}));
  EXPECT_EQ(m.ledger().Totals().total(), 0);
}

TEST(SwapRoundTest, IdenticalTerms) {
  const GraphicMatroid k4 = GraphicMatroid::Complete(4);
  CountedMatroid m(k4);
  Rng rng(1);
  const ElementSet b{0, 1, 5};
  EXPECT_EQ(SwapRound(ConvexCombination::Uniform({b, b, b}), m, rng), b);
}

TEST(SwapRoundTest, TriangleMarginals) {
  const GraphicMatroid triangle = fixtures::Triangle();
  CountedMatroid m(triangle);
  Rng rng(21);
  const auto x = ConvexCombination::Uniform({{0, 1}, {1, 2}});
  constexpr int kRuns = 20000;
  std::vector<int> hits(3, 0);
  for (int i = 0; i < kRuns; ++i) {
    for (int v : SwapRound(x, m, rng)) ++hits[v];
  }
  EXPECT_EQ(hits[1], kRuns);
  EXPECT_NEAR(static_cast<double>(hits[0]) / kRuns, 0.5, 0.02);
  EXPECT_NEAR(static_cast<double>(hits[2]) / kRuns, 0.5, 0.02);
}

TEST(SwapRoundTest, RejectsNonBases) {
  const GraphicMatroid triangle = fixtures::Triangle();
  CountedMatroid m(triangle);
  Rng rng(1);
  ConvexCombination x;
  x.terms = {{0.5, {0, 1}}, {0.4, {1, 2}}};
  EXPECT_THROW(SwapRound(x, m, rng), InputError);
}

}  // namespace
}  // namespace swapround
