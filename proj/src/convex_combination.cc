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

#include "swapround/convex_combination.h"

#include <cmath>
#include <string>

#include "swapround/errors.h"

namespace swapround {

ConvexCombination ConvexCombination::Uniform(std::vector<ElementSet> bases) {
  ConvexCombination x;
  const double beta = 1.0 / static_cast<double>(bases.size());
  for (auto& b : bases) x.terms.push_back(Term{beta, std::move(b)});
  return x;
}

void ConvexCombination::CheckShape() const {
  if (terms.empty()) throw InputError("convex combination has no terms");
  double total = 0.0;
  for (const Term& term : terms) {
    if (!(term.beta > 0.0)) throw InputError("weights must be positive");
    if (term.basis.size() != terms.front().basis.size()) {
      throw InputError("bases in a convex combination must share one size");
    }
    total += term.beta;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw InputError("weights sum to " + std::to_string(total) + ", not 1");
  }
}

void ConvexCombination::CheckBases(const Matroid& m) const {
  CheckShape();
  std::vector<int> all(m.ground_size());
  for (int v = 0; v < m.ground_size(); ++v) all[v] = v;
  const int rank = m.supports_rank() ? m.Rank(all) : terms.front().basis.size();
  for (const Term& term : terms) {
    for (int v : term.basis) {
      if (v < 0 || v >= m.ground_size()) {
        throw InputError("basis element out of range");
      }
    }
    if (term.basis.size() != rank || !m.IsIndependent(term.basis.members())) {
      throw InputError("term " + term.basis.ToString() + " is not a basis");
    }
  }
}

std::vector<double> ConvexCombination::Point(int n) const {
  std::vector<double> x(n, 0.0);
  for (const Term& term : terms) {
    for (int v : term.basis) x[v] += term.beta;
  }
  return x;
}

}  // namespace swapround
