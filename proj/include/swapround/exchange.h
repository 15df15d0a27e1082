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

#ifndef SWAPROUND_EXCHANGE_H_
#define SWAPROUND_EXCHANGE_H_

#include <optional>
#include <vector>

#include "swapround/element_set.h"
#include "swapround/matroid.h"

namespace swapround {

// FindExchangeElement uses at most
//   kExchangeSearchConstant * ceil(log2 |T|) + kExchangeSearchConstant
// independence queries: one feasibility query, then one query per halving.
inline constexpr int kExchangeSearchConstant = 1;

// FindFreeElement uses at most 1 + ceil(log2 |T|) rank queries, so a
// MaxWeightBasisUpdate stays within
//   kBasisUpdateConstant * log2(n) + kBasisUpdateConstant.
inline constexpr int kBasisUpdateConstant = 2;

// A real weight per ground-set element.
class WeightFn {
 public:
  explicit WeightFn(std::vector<double> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int v) const { return weights_[v]; }
  const std::vector<double>& values() const { return weights_; }

  // Copy with w(v) replaced by `weight`.
  WeightFn WithWeight(int v, double weight) const;

  // True when u precedes v in the order (-weight, index).
  bool Before(int u, int v) const;

 private:
  std::vector<double> weights_;
};

// Given s in I, u not in s and t a subset of s, returns some v in t with
// s + u - v in I, or nullopt if none exists.
//
// If s + u is dependent it contains a unique circuit C through u, and
// (s \ X) + u is independent exactly when X meets C. The search first asks
// whether (s \ t) + u is independent (otherwise no v in t can work), then
// halves the candidate range, keeping the left half whenever removing it
// alone still yields an independent set. The result is the smallest element
// of C inside t (or the smallest element of t when s + u is independent).
std::optional<int> FindExchangeElement(const CountedMatroid& m,
                                       const ElementSet& s, int u,
                                       const ElementSet& t);

// Given s in I and t disjoint from s, returns the element u of t maximizing
// w(u) (ties to the smaller index) such that s + u in I, or nullopt.
// Binary-searches the shortest prefix of t, sorted by (-w, index), whose
// union with s has rank above |s|. Requires a rank oracle.
std::optional<int> FindFreeElement(const CountedMatroid& m, const WeightFn& w,
                                   const ElementSet& s, const ElementSet& t);

// A strongly exchangeable pair for bases (b1, b2): u in b1 \ b2 and
// v in b2 \ b1 with b1 + v - u and b2 + u - v both independent.
struct ExchangePair {
  int u;
  int v;
  friend bool operator==(const ExchangePair&, const ExchangePair&) = default;
};

// Scans v over b2 \ b1 in ascending order and returns the first v forming a
// strongly exchangeable pair with u. At most 2|b2 \ b1| independence
// queries.
ExchangePair FindStrongExchangePair(const CountedMatroid& m,
                                    const ElementSet& b1, const ElementSet& b2,
                                    int u);

// Maximum-weight basis under the total order (-w, index), built greedily.
// Uses exactly n independence queries.
ElementSet MaxWeightBasis(const CountedMatroid& m, const WeightFn& w);

// Given a max-weight basis b for w, returns a max-weight basis after lowering
// w(v) to `new_weight`. If v is not in b, returns b without any query;
// otherwise returns b - v + u, where u is the best free element for b - v
// among (V \ b) + v under the lowered weights.
ElementSet MaxWeightBasisUpdate(const CountedMatroid& m, const ElementSet& b,
                                const WeightFn& w, int v, double new_weight);

}  // namespace swapround

#endif  // SWAPROUND_EXCHANGE_H_
