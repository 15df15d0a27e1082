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

#ifndef SWAPROUND_SWAP_ROUND_H_
#define SWAPROUND_SWAP_ROUND_H_

#include <utility>

#include "swapround/convex_combination.h"
#include "swapround/element_set.h"
#include "swapround/exchange.h"
#include "swapround/matroid.h"
#include "swapround/random.h"

namespace swapround {

// Pair of bases (b1, b2) after an update step.
using BasisPair = std::pair<ElementSet, ElementSet>;

// One randomized exchange along a strongly exchangeable pair: with
// probability beta2 / (beta1 + beta2) returns (b1 + v - u, b2), otherwise
// (b1, b2 + u - v). Draws one coin from `rng`. Only checks that u and v sit
// on the correct sides of the symmetric difference; no oracle queries.
BasisPair UpdateViaStrongBasisExchange(double beta1, const ElementSet& b1,
                                       double beta2, const ElementSet& b2,
                                       const ExchangePair& pair, Rng& rng);

// Merges two bases by repeated strong exchanges until they coincide, always
// exchanging the smallest element of b1 \ b2. O(r^2) independence queries.
ElementSet MergeBases(double beta1, ElementSet b1, double beta2, ElementSet b2,
                      const CountedMatroid& m, Rng& rng);

// Folds the terms of x left to right with MergeBases, carrying the
// accumulated weight. Returns B_1 unchanged when x has one term.
ElementSet SwapRound(const ConvexCombination& x, const CountedMatroid& m,
                     Rng& rng);

}  // namespace swapround

#endif  // SWAPROUND_SWAP_ROUND_H_
