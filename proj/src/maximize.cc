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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swapround/errors.h"

namespace swapround {

int DefaultSamplesPerEstimate(int n, double epsilon, int cap) {
  const double raw = std::ceil(200.0 * std::log(std::max(n, 1)) /
                               (epsilon * epsilon));
  return std::max(1, static_cast<int>(std::min<double>(raw, cap)));
}

int ContinuousGreedySteps(double epsilon) {
  return std::max(1, static_cast<int>(std::ceil(1.0 / epsilon - 1e-9)));
}

ConvexCombination ContinuousGreedy(const ValueOracle& f,
                                   const CountedMatroid& m, double epsilon,
                                   int samples_per_estimate, Rng& rng) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw InputError("continuous greedy needs epsilon in (0, 1]");
  }
  if (samples_per_estimate < 1) throw InputError("need at least one sample");
  const int n = f.ground_size();
  if (m.ground_size() != n) {
    throw InputError("objective and matroid ground sets differ");
  }
  const int steps = ContinuousGreedySteps(epsilon);
  const double step = 1.0 / steps;
  std::vector<double> y(n, 0.0);
  std::vector<ElementSet> bases;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int s = 0; s < steps; ++s) {
    std::vector<double> gain(n, 0.0);
    for (int k = 0; k < samples_per_estimate; ++k) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v) {
        if (unit(rng) < y[v]) members.push_back(v);
      }
      const ElementSet sample = ElementSet::FromUnsorted(std::move(members));
      const double base = f.Value(sample);
      // Unbiased estimate of the partial derivative of F at y.
      for (int e = 0; e < n; ++e) {
        gain[e] += sample.Contains(e) ? base - f.Value(sample.Without(e))
                                      : f.Value(sample.With(e)) - base;
      }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&gain](int a, int b) { return gain[a] > gain[b]; });
    ElementSet basis = GreedyBasis(m, order);
    for (int v : basis) y[v] = std::min(1.0, y[v] + step);
    bases.push_back(std::move(basis));
  }
  return ConvexCombination::Uniform(std::move(bases));
}

MaximizeResult Maximize(const SubmodularFunction& f, const Matroid& m,
                        double epsilon, const MaximizeConfig& config,
                        Rng& rng) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  if (!(config.relaxation_share > 0.0 && config.relaxation_share < 1.0)) {
    throw InputError("relaxation share must lie in (0, 1)");
  }
  if (f.ground_size() != m.ground_size()) {
    throw InputError("objective and matroid ground sets differ");
  }
  auto ledger = std::make_shared<QueryLedger>();
  CountedMatroid matroid(m, ledger);
  ValueOracle oracle(f, ledger);

  const double epsilon_relax = epsilon * config.relaxation_share;
  const double epsilon_round = epsilon - epsilon_relax;
  MaximizeResult result;
  result.samples_per_estimate =
      config.samples_per_estimate > 0
          ? config.samples_per_estimate
          : DefaultSamplesPerEstimate(f.ground_size(), epsilon_relax,
                                      config.max_samples_per_estimate);

  ConvexCombination x;
  {
    QueryLedger::ScopedPhase phase(*ledger, "relaxation");
    x = ContinuousGreedy(oracle, matroid, epsilon_relax,
                         result.samples_per_estimate, rng);
  }
  result.term_count = x.size();
  {
    QueryLedger::ScopedPhase phase(*ledger, "rounding");
    result.rounding = SwapRoundBoosted(x, matroid, epsilon_round, rng,
                                       config.budget_constant,
                                       config.cycle_search);
  }
  result.solution = result.rounding.basis;
  {
    QueryLedger::ScopedPhase phase(*ledger, "evaluation");
    result.value = oracle.Value(result.solution);
  }
  result.totals = ledger->Totals();
  result.phases = {{"relaxation", {}}, {"rounding", {}}, {"evaluation", {}}};
  for (const auto& [name, counts] : ledger->Phases()) {
    result.phases[name] = counts;
  }
  return result;
}

}  // namespace swapround
