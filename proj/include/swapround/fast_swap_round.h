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

#ifndef SWAPROUND_FAST_SWAP_ROUND_H_
#define SWAPROUND_FAST_SWAP_ROUND_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "swapround/convex_combination.h"
#include "swapround/element_set.h"
#include "swapround/matroid.h"
#include "swapround/random.h"
#include "swapround/swap_round.h"

namespace swapround {

// The bipartite exchange digraph D(b1, b2) on b1 \ b2 and b2 \ b1:
//   u -> v  iff  b1 + v - u is independent   (u in b1 \ b2, v in b2 \ b1)
//   v -> u  iff  b2 + u - v is independent
// Edges are never materialized; each EdgeExists call is one query.
class ExchangeDigraph {
 public:
  ExchangeDigraph(const CountedMatroid& m, ElementSet b1, ElementSet b2);

  const CountedMatroid& matroid() const { return m_; }
  const ElementSet& b1() const { return b1_; }
  const ElementSet& b2() const { return b2_; }
  // Vertex sides: b1 \ b2 and b2 \ b1.
  const ElementSet& left() const { return left_; }
  const ElementSet& right() const { return right_; }

  bool IsLeft(int x) const { return left_.Contains(x); }
  bool IsRight(int x) const { return right_.Contains(x); }

  // Throws InputError unless `from` and `to` lie on opposite sides.
  bool EdgeExists(int from, int to) const;

 private:
  const CountedMatroid& m_;
  ElementSet b1_;
  ElementSet b2_;
  ElementSet left_;
  ElementSet right_;
};

// A directed cycle u_0 -> v_0 -> u_1 -> v_1 -> ... -> v_{l-1} -> u_0 with
// u_i in b1 \ b2 and v_i in b2 \ b1.
struct DirectedCycle {
  std::vector<int> u;
  std::vector<int> v;

  int half_length() const { return static_cast<int>(u.size()); }
  int length() const { return 2 * half_length(); }
};

// Sides, alternation and distinctness only; no oracle queries.
void CheckCycleShape(const DirectedCycle& cycle, const ElementSet& b1,
                     const ElementSet& b2);

// CheckCycleShape plus an oracle check of every edge (2l queries). Returns
// false if any edge is missing or the shape is wrong.
bool ValidateCycle(const ExchangeDigraph& graph, const DirectedCycle& cycle);

// Number of draws per side for the sampled subgraph:
// ceil(2 sqrt(r ln(r t))), natural log.
int CycleSampleSize(int rank, int term_count);

struct SampledSides {
  ElementSet left;
  ElementSet right;
};

// Draws CycleSampleSize(r, t) elements with replacement from each side and
// drops repeats. A side no larger than the draw count is taken whole and
// consumes no randomness. Left side is drawn before right.
SampledSides SampleCycleSearchSides(const ExchangeDigraph& graph, int rank,
                                    int term_count, Rng& rng);

// Length-2 cycle through `a`. Repeatedly locates an in-neighbour of `a` that
// has not been rejected yet (one FindExchangeElement call) and tests the
// reverse edge directly, rejecting the neighbour on failure. Uses
// O(d log r) queries for a vertex of indegree d.
DirectedCycle FindCycleLowIndegree(const ExchangeDigraph& graph, int a);

// How FindDirectedCycle explores the sampled subgraph D' on L + R.
enum class CycleSearch {
  // Starting from the smallest vertex of L, asks for an in-neighbour inside
  // the sample only for the vertex the walk currently sits on, and follows
  // it. Stops at the first repeated vertex (a cycle) or at the first vertex
  // with no sampled in-neighbour (handed to FindCycleLowIndegree). Every
  // sampled vertex is queried at most once, so it never asks more than
  // kFullSample on the same sample.
  kPredecessorWalk,
  // Asks every vertex of L, then of R, for an in-neighbour first. If all have
  // one, walks predecessors; otherwise runs FindCycleLowIndegree on the
  // smallest vertex that lacked one.
  kFullSample,
};

// Finds a directed cycle of D(b1, b2) with O(sqrt(r) log^{3/2}(rt)) queries
// with probability at least 1 - (rt)^{-2}, after sampling L and R with
// SampleCycleSearchSides. `term_count` is t >= 2.
DirectedCycle FindDirectedCycle(
    const ExchangeDigraph& graph, int term_count, Rng& rng,
    CycleSearch strategy = CycleSearch::kPredecessorWalk);

// With probability beta2 / (beta1 + beta2) replaces b1 by b1 + v_i - u_i for
// uniform i; otherwise replaces b2 by b2 + u_{i+1} - v_i (u_l = u_0). Draws
// the coin, then the index. Checks cycle shape only.
BasisPair UpdateWithCycle(double beta1, const ElementSet& b1, double beta2,
                          const ElementSet& b2, const DirectedCycle& cycle,
                          Rng& rng);

// Merges b1, b2 by FindDirectedCycle + UpdateWithCycle until they coincide.
ElementSet FastMergeBases(double beta1, ElementSet b1, double beta2,
                          ElementSet b2, const CountedMatroid& m,
                          int term_count, Rng& rng,
                          CycleSearch strategy = CycleSearch::kPredecessorWalk);

// Folds the terms of x with FastMergeBases in input order.
ElementSet FastSwapRound(const ConvexCombination& x, const CountedMatroid& m,
                         Rng& rng,
                         CycleSearch strategy = CycleSearch::kPredecessorWalk);

// FastSwapRound that gives up once the ledger records more than
// `independence_budget` independence queries since the call began. Returns
// nullopt on abort.
std::optional<ElementSet> FastSwapRoundWithinBudget(
    const ConvexCombination& x, const CountedMatroid& m, Rng& rng,
    std::int64_t independence_budget,
    CycleSearch strategy = CycleSearch::kPredecessorWalk);

inline constexpr double kDefaultBudgetConstant = 64.0;

// C * r^{3/2} * t * ceil(ln(rt))^{3/2}, rounded up.
std::int64_t BoostedQueryBudget(int rank, int term_count,
                                double budget_constant);

// q = ceil(log_{(rt)^{-1}} epsilon) = ceil(ln(1/epsilon) / ln(rt)), at least 1.
int BoostRepetitions(int rank, int term_count, double epsilon);

struct BoostedRoundOutcome {
  ElementSet basis;
  // Budget-capped runs started, and whether all of them aborted.
  int attempts = 0;
  bool fell_back = false;
  std::int64_t budget = 0;
};

// Runs FastSwapRoundWithinBudget up to q times and returns the first
// completed basis; if every run aborts, returns the greedy basis in index
// order. E[f(S)] >= (1 - epsilon) F(x).
BoostedRoundOutcome SwapRoundBoosted(
    const ConvexCombination& x, const CountedMatroid& m, double epsilon,
    Rng& rng, double budget_constant = kDefaultBudgetConstant,
    CycleSearch strategy = CycleSearch::kPredecessorWalk);

}  // namespace swapround

#endif  // SWAPROUND_FAST_SWAP_ROUND_H_
