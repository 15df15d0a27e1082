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

#include "swapround/query_ledger.h"

#include <gtest/gtest.h>

#include <memory>

#include "swapround/matroid.h"

namespace swapround {
namespace {

TEST(QueryLedgerTest, EachCallIncrementsExactlyOneCounter) {
  QueryLedger ledger;
  ledger.CountIndependence();
  ledger.CountIndependence();
  ledger.CountRank();
  ledger.CountValue();
  EXPECT_EQ(ledger.Totals(), (QueryCounts{2, 1, 1}));
  EXPECT_EQ(ledger.Totals().total(), 4);
}

TEST(QueryLedgerTest, PhasesPartitionTheTotals) {
  QueryLedger ledger;
  ledger.CountIndependence();
  {
    QueryLedger::ScopedPhase outer(ledger, "outer");
    ledger.CountRank();
    {
      QueryLedger::ScopedPhase inner(ledger, "inner");
      ledger.CountValue();
      ledger.CountValue();
    }
    ledger.CountIndependence();
  }
  EXPECT_EQ(ledger.phase(), QueryLedger::kDefaultPhase);
  const auto phases = ledger.Phases();
  EXPECT_EQ(phases.at("default"), (QueryCounts{1, 0, 0}));
  EXPECT_EQ(phases.at("outer"), (QueryCounts{1, 1, 0}));
  EXPECT_EQ(phases.at("inner"), (QueryCounts{0, 0, 2}));
  QueryCounts sum;
  for (const auto& [name, counts] : phases) sum += counts;
  EXPECT_EQ(sum, ledger.Totals());
}

TEST(QueryLedgerTest, CountedMatroidSharesLedger) {
  const UniformMatroid u(4, 2);
  auto ledger = std::make_shared<QueryLedger>();
  CountedMatroid a(u, ledger);
  CountedMatroid b(u, ledger);
  a.IsIndependent(ElementSet{0});
  b.Rank(ElementSet{0, 1, 2});
  b.IsIndependent(ElementSet{});
  EXPECT_EQ(ledger->independence_queries(), 2);
  EXPECT_EQ(ledger->rank_queries(), 1);
  EXPECT_EQ(&a.ledger(), ledger.get());
}

TEST(QueryLedgerTest, CountsNeverDecrease) {
  const GraphicMatroid k4 = GraphicMatroid::Complete(4);
  CountedMatroid m(k4);
  std::int64_t previous = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    m.IsIndependent(ElementSet::FromMask(mask, 6));
    const std::int64_t now = m.ledger().independence_queries();
    EXPECT_EQ(now, previous + 1);
    previous = now;
  }
}

TEST(QueryLedgerTest, RejectedInputIsNotCounted) {
  const UniformMatroid u(4, 2);
  CountedMatroid m(u);
  EXPECT_THROW(m.IsIndependent(ElementSet{4}), std::invalid_argument);
  EXPECT_EQ(m.ledger().Totals().total(), 0);
}

}  // namespace
}  // namespace swapround
