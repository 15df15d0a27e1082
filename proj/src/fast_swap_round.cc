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

#include "swapround/fast_swap_round.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "swapround/errors.h"
#include "swapround/exchange.h"

namespace swapround {
namespace {

ElementSet SampleSide(const ElementSet& side, int draws, Rng& rng) {
  if (draws >= side.size()) return side;
  std::vector<int> picked;
  picked.reserve(draws);
  std::span<const int> members = side.members();
  for (int i = 0; i < draws; ++i) {
    picked.push_back(members[UniformIndex(rng, side.size())]);
  }
  return ElementSet::FromUnsorted(std::move(picked));
}

// Budget accounting for a single fold; unlimited when limit is negative.
class IndependenceBudget {
 public:
  IndependenceBudget(const QueryLedger& ledger, std::int64_t limit)
      : ledger_(ledger), start_(ledger.independence_queries()), limit_(limit) {}

  bool Exhausted() const {
    return limit_ >= 0 && ledger_.independence_queries() - start_ > limit_;
  }

 private:
  const QueryLedger& ledger_;
  std::int64_t start_;
  std::int64_t limit_;
};

std::optional<ElementSet> MergeWithinBudget(double beta1, ElementSet b1,
                                            double beta2, ElementSet b2,
                                            const CountedMatroid& m,
                                            int term_count, Rng& rng,
                                            const IndependenceBudget& budget,
                                            CycleSearch strategy) {
  if (b1.size() != b2.size()) throw InputError("bases differ in size");
  const std::int64_t rank = b1.size();
  const std::int64_t max_rounds = 10 * rank * rank;
  for (std::int64_t round = 0; b1 != b2; ++round) {
    if (round >= max_rounds) {
      throw std::logic_error("fast merge exceeded its iteration cap");
    }
    if (budget.Exhausted()) return std::nullopt;
    ExchangeDigraph graph(m, b1, b2);
    const DirectedCycle cycle = FindDirectedCycle(graph, term_count, rng, strategy);
    std::tie(b1, b2) = UpdateWithCycle(beta1, b1, beta2, b2, cycle, rng);
  }
  if (budget.Exhausted()) return std::nullopt;
  return b1;
}

std::optional<ElementSet> FoldWithinBudget(const ConvexCombination& x,
                                           const CountedMatroid& m, Rng& rng,
                                           std::int64_t limit,
                                           CycleSearch strategy) {
  x.CheckShape();
  IndependenceBudget budget(m.ledger(), limit);
  const int t = x.size();
  ElementSet merged = x.terms.front().basis;
  double gamma = x.terms.front().beta;
  for (int i = 1; i < t; ++i) {
    const auto& term = x.terms[i];
    std::optional<ElementSet> next = MergeWithinBudget(
        gamma, std::move(merged), term.beta, term.basis, m, t, rng, budget,
        strategy);
    if (!next) return std::nullopt;
    merged = std::move(*next);
    gamma += term.beta;
  }
  return merged;
}

}  // namespace

ExchangeDigraph::ExchangeDigraph(const CountedMatroid& m, ElementSet b1,
                                 ElementSet b2)
    : m_(m),
      b1_(std::move(b1)),
      b2_(std::move(b2)),
      left_(b1_.Minus(b2_)),
      right_(b2_.Minus(b1_)) {
  m_.CheckElements(b1_.members());
  m_.CheckElements(b2_.members());
  if (b1_.size() != b2_.size()) throw InputError("bases differ in size");
}

bool ExchangeDigraph::EdgeExists(int from, int to) const {
  if (IsLeft(from) && IsRight(to)) return m_.IsIndependent(b1_.Swap(from, to));
  if (IsRight(from) && IsLeft(to)) return m_.IsIndependent(b2_.Swap(from, to));
  throw InputError("edge endpoints must lie on opposite sides");
}

void CheckCycleShape(const DirectedCycle& cycle, const ElementSet& b1,
                     const ElementSet& b2) {
  if (cycle.u.empty() || cycle.u.size() != cycle.v.size()) {
    throw InputError("cycle must alternate sides with l >= 1");
  }
  std::unordered_set<int> seen;
  for (int i = 0; i < cycle.half_length(); ++i) {
    const int u = cycle.u[i];
    const int v = cycle.v[i];
    if (!b1.Contains(u) || b2.Contains(u) || !b2.Contains(v) ||
        b1.Contains(v)) {
      throw InputError("cycle vertex on the wrong side");
    }
    if (!seen.insert(u).second || !seen.insert(v).second) {
      throw InputError("cycle repeats a vertex");
    }
  }
}

bool ValidateCycle(const ExchangeDigraph& graph, const DirectedCycle& cycle) {
  try {
    CheckCycleShape(cycle, graph.b1(), graph.b2());
  } catch (const InputError&) {
    return false;
  }
  const int l = cycle.half_length();
  for (int i = 0; i < l; ++i) {
    if (!graph.EdgeExists(cycle.u[i], cycle.v[i])) return false;
    if (!graph.EdgeExists(cycle.v[i], cycle.u[(i + 1) % l])) return false;
  }
  return true;
}

int CycleSampleSize(int rank, int term_count) {
  const double rt = static_cast<double>(rank) * term_count;
  if (rt <= 1.0) return 1;
  return static_cast<int>(std::ceil(2.0 * std::sqrt(rank * std::log(rt))));
}

SampledSides SampleCycleSearchSides(const ExchangeDigraph& graph, int rank,
                                    int term_count, Rng& rng) {
  const int draws = CycleSampleSize(rank, term_count);
  SampledSides sides;
  sides.left = SampleSide(graph.left(), draws, rng);
  sides.right = SampleSide(graph.right(), draws, rng);
  return sides;
}

DirectedCycle FindCycleLowIndegree(const ExchangeDigraph& graph, int a) {
  const CountedMatroid& m = graph.matroid();
  if (graph.IsLeft(a)) {
    // In-neighbours v of a satisfy b2 + a - v in I.
    ElementSet candidates = graph.right();
    while (std::optional<int> v =
               FindExchangeElement(m, graph.b2(), a, candidates)) {
      if (graph.EdgeExists(a, *v)) return DirectedCycle{{a}, {*v}};
      candidates.Erase(*v);
    }
  } else if (graph.IsRight(a)) {
    // In-neighbours u of a satisfy b1 + a - u in I.
    ElementSet candidates = graph.left();
    while (std::optional<int> u =
               FindExchangeElement(m, graph.b1(), a, candidates)) {
      if (graph.EdgeExists(a, *u)) return DirectedCycle{{*u}, {a}};
      candidates.Erase(*u);
    }
  } else {
    throw InputError("vertex " + std::to_string(a) +
                     " is not in the symmetric difference");
  }
  throw std::logic_error(
      "no strongly exchangeable partner found; inputs are not bases");
}

namespace {

// Turns a backwards walk (each entry's successor in `walk` is its
// predecessor in the digraph) whose last entry points back at walk[first]
// into a forward cycle starting on the left side.
DirectedCycle CycleFromBackwardWalk(const ExchangeDigraph& graph,
                                    const std::vector<int>& walk, int first) {
  std::vector<int> forward(walk.begin() + first, walk.end());
  std::reverse(forward.begin(), forward.end());
  if (!graph.IsLeft(forward.front())) {
    std::rotate(forward.begin(), forward.begin() + 1, forward.end());
  }
  DirectedCycle cycle;
  for (size_t i = 0; i + 1 < forward.size(); i += 2) {
    cycle.u.push_back(forward[i]);
    cycle.v.push_back(forward[i + 1]);
  }
  return cycle;
}

// In-neighbour of x inside the sampled subgraph, if any.
std::optional<int> SampledInNeighbour(const ExchangeDigraph& graph,
                                      const SampledSides& sides, int x) {
  if (graph.IsLeft(x)) {
    return FindExchangeElement(graph.matroid(), graph.b2(), x, sides.right);
  }
  return FindExchangeElement(graph.matroid(), graph.b1(), x, sides.left);
}

DirectedCycle FullSampleSearch(const ExchangeDigraph& graph,
                               const SampledSides& sides) {
  // pred[x] is an in-neighbour of x inside the sample.
  std::unordered_map<int, int> pred;
  std::optional<int> lacking;
  for (const ElementSet* side : {&sides.left, &sides.right}) {
    for (int x : *side) {
      if (auto p = SampledInNeighbour(graph, sides, x)) {
        pred[x] = *p;
      } else if (!lacking || x < *lacking) {
        lacking = x;
      }
    }
  }
  if (lacking) return FindCycleLowIndegree(graph, *lacking);

  std::unordered_map<int, int> position;
  std::vector<int> walk;
  int x = sides.left.front();
  while (!position.count(x)) {
    position[x] = static_cast<int>(walk.size());
    walk.push_back(x);
    x = pred.at(x);
  }
  return CycleFromBackwardWalk(graph, walk, position[x]);
}

DirectedCycle PredecessorWalkSearch(const ExchangeDigraph& graph,
                                    const SampledSides& sides) {
  std::unordered_map<int, int> position;
  std::vector<int> walk;
  int x = sides.left.front();
  while (!position.count(x)) {
    position[x] = static_cast<int>(walk.size());
    walk.push_back(x);
    std::optional<int> p = SampledInNeighbour(graph, sides, x);
    if (!p) return FindCycleLowIndegree(graph, x);
    x = *p;
  }
  return CycleFromBackwardWalk(graph, walk, position[x]);
}

}  // namespace

DirectedCycle FindDirectedCycle(const ExchangeDigraph& graph, int term_count,
                                Rng& rng, CycleSearch strategy) {
  if (graph.left().empty()) throw InputError("bases coincide; no cycle");
  if (term_count < 2) throw InputError("cycle search needs t >= 2");
  const SampledSides sides =
      SampleCycleSearchSides(graph, graph.b1().size(), term_count, rng);
  switch (strategy) {
    case CycleSearch::kFullSample:
      return FullSampleSearch(graph, sides);
    case CycleSearch::kPredecessorWalk:
      break;
  }
  return PredecessorWalkSearch(graph, sides);
}

BasisPair UpdateWithCycle(double beta1, const ElementSet& b1, double beta2,
                          const ElementSet& b2, const DirectedCycle& cycle,
                          Rng& rng) {
  CheckCycleShape(cycle, b1, b2);
  if (beta1 < 0.0 || beta2 < 0.0 || !(beta1 + beta2 > 0.0)) {
    throw InputError("exchange weights must be non-negative, not both zero");
  }
  const int l = cycle.half_length();
  if (FlipCoin(rng, beta2 / (beta1 + beta2))) {
    const int i = UniformIndex(rng, l);
    return {b1.Swap(cycle.u[i], cycle.v[i]), b2};
  }
  const int i = UniformIndex(rng, l);
  return {b1, b2.Swap(cycle.v[i], cycle.u[(i + 1) % l])};
}

ElementSet FastMergeBases(double beta1, ElementSet b1, double beta2,
                          ElementSet b2, const CountedMatroid& m,
                          int term_count, Rng& rng, CycleSearch strategy) {
  IndependenceBudget unlimited(m.ledger(), -1);
  return *MergeWithinBudget(beta1, std::move(b1), beta2, std::move(b2), m,
                            term_count, rng, unlimited, strategy);
}

ElementSet FastSwapRound(const ConvexCombination& x, const CountedMatroid& m,
                         Rng& rng, CycleSearch strategy) {
  return *FoldWithinBudget(x, m, rng, -1, strategy);
}

std::optional<ElementSet> FastSwapRoundWithinBudget(
    const ConvexCombination& x, const CountedMatroid& m, Rng& rng,
    std::int64_t independence_budget, CycleSearch strategy) {
  if (independence_budget < 0) throw InputError("budget must be >= 0");
  return FoldWithinBudget(x, m, rng, independence_budget, strategy);
}

std::int64_t BoostedQueryBudget(int rank, int term_count,
                                double budget_constant) {
  const double rt = static_cast<double>(rank) * term_count;
  const double log_factor = std::ceil(std::log(std::max(rt, 1.0)));
  return static_cast<std::int64_t>(std::ceil(
      budget_constant * std::pow(rank, 1.5) * term_count *
      std::pow(log_factor, 1.5)));
}

int BoostRepetitions(int rank, int term_count, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  const double rt = static_cast<double>(rank) * term_count;
  if (rt <= 1.0) return 1;
  const int q =
      static_cast<int>(std::ceil(std::log(1.0 / epsilon) / std::log(rt)));
  return std::max(q, 1);
}

BoostedRoundOutcome SwapRoundBoosted(const ConvexCombination& x,
                                     const CountedMatroid& m, double epsilon,
                                     Rng& rng, double budget_constant,
                                     CycleSearch strategy) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  if (!(budget_constant >= 0.0)) {
    throw InputError("budget constant must be non-negative");
  }
  x.CheckShape();
  BoostedRoundOutcome outcome;
  const int rank = x.terms.front().basis.size();
  const int t = x.size();
  if (t == 1 || rank == 0) {
    outcome.basis = x.terms.front().basis;
    return outcome;
  }
  outcome.budget = BoostedQueryBudget(rank, t, budget_constant);
  const int q = BoostRepetitions(rank, t, epsilon);
  for (int attempt = 0; attempt < q; ++attempt) {
    ++outcome.attempts;
    if (auto basis = FastSwapRoundWithinBudget(x, m, rng, outcome.budget,
                                               strategy)) {
      outcome.basis = std::move(*basis);
      return outcome;
    }
  }
  outcome.fell_back = true;
  std::vector<int> identity(m.ground_size());
  std::iota(identity.begin(), identity.end(), 0);
  outcome.basis = GreedyBasis(m, identity);
  return outcome;
}

}  // namespace swapround
