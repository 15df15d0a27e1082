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

#include "swapround/errors.h"

namespace swapround {

BasisPair UpdateViaStrongBasisExchange(double beta1, const ElementSet& b1,
                                       double beta2, const ElementSet& b2,
                                       const ExchangePair& pair, Rng& rng) {
  if (!b1.Contains(pair.u) || b2.Contains(pair.u) || !b2.Contains(pair.v) ||
      b1.Contains(pair.v)) {
    throw InputError("exchange pair does not straddle b1 and b2");
  }
  if (beta1 < 0.0 || beta2 < 0.0 || !(beta1 + beta2 > 0.0)) {
    throw InputError("exchange weights must be non-negative, not both zero");
  }
  if (FlipCoin(rng, beta2 / (beta1 + beta2))) {
    return {b1.Swap(pair.u, pair.v), b2};
  }
  return {b1, b2.Swap(pair.v, pair.u)};
}

ElementSet MergeBases(double beta1, ElementSet b1, double beta2, ElementSet b2,
                      const CountedMatroid& m, Rng& rng) {
  if (b1.size() != b2.size()) throw InputError("bases differ in size");
  while (b1 != b2) {
    const int u = b1.Minus(b2).front();
    const ExchangePair pair = FindStrongExchangePair(m, b1, b2, u);
    std::tie(b1, b2) =
        UpdateViaStrongBasisExchange(beta1, b1, beta2, b2, pair, rng);
  }
  return b1;
}

ElementSet SwapRound(const ConvexCombination& x, const CountedMatroid& m,
                     Rng& rng) {
  x.CheckShape();
  ElementSet merged = x.terms.front().basis;
  double gamma = x.terms.front().beta;
  for (int i = 1; i < x.size(); ++i) {
    const auto& term = x.terms[i];
    merged = MergeBases(gamma, std::move(merged), term.beta, term.basis, m, rng);
    gamma += term.beta;
  }
  return merged;
}

}  // namespace swapround
