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

#ifndef SWAPROUND_MAXIMIZE_H_
#define SWAPROUND_MAXIMIZE_H_

#include <map>
#include <string>

#include "swapround/convex_combination.h"
#include "swapround/fast_swap_round.h"
#include "swapround/matroid.h"
#include "swapround/query_ledger.h"
#include "swapround/random.h"
#include "swapround/submodular.h"

namespace swapround {

inline constexpr int kDefaultMaxSamplesPerEstimate = 500;

// min(cap, ceil(200 ln(n) / epsilon^2)), at least 1.
int DefaultSamplesPerEstimate(int n, double epsilon,
                              int cap = kDefaultMaxSamplesPerEstimate);

// Number of discrete steps ceil(1/epsilon), robust to 1/epsilon landing a
// rounding error above an integer.
int ContinuousGreedySteps(double epsilon);

// Discrete continuous greedy with ceil(1/epsilon) steps. Each step draws
// `samples_per_estimate` sets R ~ R(y), estimates every partial derivative
// dF/dy_e = E[f(R + e) - f(R - e)] on those same draws, builds the greedy
// basis in order of decreasing estimate (ties to the smaller index) and moves
// y by 1_B / steps. Returns the equal-weight combination of the step bases.
// epsilon in (0, 1].
ConvexCombination ContinuousGreedy(const ValueOracle& f,
                                   const CountedMatroid& m, double epsilon,
                                   int samples_per_estimate, Rng& rng);

struct MaximizeConfig {
  // Share of epsilon given to the relaxation; the rest goes to rounding.
  double relaxation_share = 0.5;
  // 0 selects DefaultSamplesPerEstimate(n, epsilon_relax, max_samples).
  int samples_per_estimate = 0;
  int max_samples_per_estimate = kDefaultMaxSamplesPerEstimate;
  double budget_constant = kDefaultBudgetConstant;
  CycleSearch cycle_search = CycleSearch::kPredecessorWalk;
};

struct MaximizeResult {
  ElementSet solution;
  double value = 0.0;
  int term_count = 0;
  int samples_per_estimate = 0;
  BoostedRoundOutcome rounding;
  QueryCounts totals;
  // Phases: "relaxation", "rounding", "evaluation".
  std::map<std::string, QueryCounts> phases;
};

// Continuous greedy with epsilon * share, then boosted fast rounding with
// epsilon * (1 - share), then one value query for f(S). Wraps both oracles
// with a fresh shared ledger. epsilon in (0, 1).
MaximizeResult Maximize(const SubmodularFunction& f, const Matroid& m,
                        double epsilon, const MaximizeConfig& config,
                        Rng& rng);

}  // namespace swapround

#endif  // SWAPROUND_MAXIMIZE_H_
