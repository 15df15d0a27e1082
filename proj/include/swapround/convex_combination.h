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

#ifndef SWAPROUND_CONVEX_COMBINATION_H_
#define SWAPROUND_CONVEX_COMBINATION_H_

#include <utility>
#include <vector>

#include "swapround/element_set.h"
#include "swapround/matroid.h"

namespace swapround {

inline constexpr double kWeightSumTolerance = 1e-9;

// x = sum_i beta_i 1_{B_i}, a point of the base polytope given by its
// decomposition into bases.
struct ConvexCombination {
  struct Term {
    double beta;
    ElementSet basis;
  };
  std::vector<Term> terms;

  int size() const { return static_cast<int>(terms.size()); }

  // Equal weights 1/k over the given bases.
  static ConvexCombination Uniform(std::vector<ElementSet> bases);

  // Checks positivity, unit total weight and equal basis sizes. Throws
  // InputError on violation; asks no oracle queries.
  void CheckShape() const;

  // CheckShape plus independence of every basis against `m` directly, i.e.
  // outside any query ledger.
  void CheckBases(const Matroid& m) const;

  // x_v = sum over terms containing v of beta_i.
  std::vector<double> Point(int n) const;
};

}  // namespace swapround

#endif  // SWAPROUND_CONVEX_COMBINATION_H_
