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

#include "swapround/exchange.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "swapround/errors.h"

namespace swapround {
namespace {

// (s \ removed) + u, where removed is a contiguous run of sorted candidates.
ElementSet RemoveRunAndAdd(const ElementSet& s,
                           std::span<const int> removed, int u) {
  std::vector<int> members;
  members.reserve(s.size() + 1);
  size_t r = 0;
  for (int x : s) {
    while (r < removed.size() && removed[r] < x) ++r;
    if (r < removed.size() && removed[r] == x) continue;
    members.push_back(x);
  }
  members.push_back(u);
  return ElementSet::FromUnsorted(std::move(members));
}

}  // namespace

WeightFn::WeightFn(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double x : weights_) {
    if (!std::isfinite(x)) throw InputError("weights must be finite");
  }
}

WeightFn WeightFn::WithWeight(int v, double weight) const {
  std::vector<double> copy = weights_;
  copy.at(v) = weight;
  return WeightFn(std::move(copy));
}

bool WeightFn::Before(int u, int v) const {
  if (weights_[u] != weights_[v]) return weights_[u] > weights_[v];
  return u < v;
}

std::optional<int> FindExchangeElement(const CountedMatroid& m,
                                       const ElementSet& s, int u,
                                       const ElementSet& t) {
  m.CheckElements(s.members());
  m.CheckElements(t.members());
  m.CheckElement(u);
  if (s.Contains(u)) throw InputError("exchange search needs u outside s");
  if (!t.IsSubsetOf(s)) throw InputError("exchange search needs t within s");
  if (t.empty()) return std::nullopt;

  std::span<const int> candidates = t.members();
  if (!m.IsIndependent(RemoveRunAndAdd(s, candidates, u))) {
    return std::nullopt;
  }
  // Invariant: (s \ candidates[lo, hi)) + u is independent.
  size_t lo = 0;
  size_t hi = candidates.size();
  while (hi - lo > 1) {
    size_t mid = lo + (hi - lo + 1) / 2;
    if (m.IsIndependent(
            RemoveRunAndAdd(s, candidates.subspan(lo, mid - lo), u))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return candidates[lo];
}

std::optional<int> FindFreeElement(const CountedMatroid& m, const WeightFn& w,
                                   const ElementSet& s, const ElementSet& t) {
  if (!m.supports_rank()) {
    throw CapabilityError("FindFreeElement requires a rank oracle");
  }
  m.CheckElements(s.members());
  m.CheckElements(t.members());
  if (w.size() != m.ground_size()) {
    throw InputError("weight function must cover the ground set");
  }
  if (!t.Intersection(s).empty()) {
    throw InputError("free-element search needs t disjoint from s");
  }
  if (t.empty()) return std::nullopt;

  std::vector<int> sorted(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end(),
            [&w](int a, int b) { return w.Before(a, b); });
  const int base_rank = s.size();
  auto prefix_is_free = [&](size_t k) {
    std::vector<int> members(s.begin(), s.end());
    members.insert(members.end(), sorted.begin(), sorted.begin() + k);
    return m.Rank(ElementSet::FromUnsorted(std::move(members))) > base_rank;
  };

  if (!prefix_is_free(sorted.size())) return std::nullopt;
  // Smallest k in [1, |t|] whose prefix raises the rank.
  size_t lo = 1;
  size_t hi = sorted.size();
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (prefix_is_free(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return sorted[lo - 1];
}

ExchangePair FindStrongExchangePair(const CountedMatroid& m,
                                    const ElementSet& b1, const ElementSet& b2,
                                    int u) {
  if (!b1.Contains(u) || b2.Contains(u)) {
    throw InputError("strong exchange needs u in b1 \\ b2");
  }
  for (int v : b2.Minus(b1)) {
    if (m.IsIndependent(b1.Swap(u, v)) && m.IsIndependent(b2.Swap(v, u))) {
      return ExchangePair{u, v};
    }
  }
  throw InputError("no strongly exchangeable partner for " +
                   std::to_string(u) + "; inputs are not both bases");
}

ElementSet MaxWeightBasis(const CountedMatroid& m, const WeightFn& w) {
  if (w.size() != m.ground_size()) {
    throw InputError("weight function must cover the ground set");
  }
  std::vector<int> order(m.ground_size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&w](int a, int b) { return w.Before(a, b); });
  return GreedyBasis(m, order);
}

ElementSet MaxWeightBasisUpdate(const CountedMatroid& m, const ElementSet& b,
                                const WeightFn& w, int v, double new_weight) {
  m.CheckElement(v);
  if (!(new_weight < w[v])) {
    throw InputError("basis update requires a strictly lower weight");
  }
  if (!b.Contains(v)) return b;
  const WeightFn lowered = w.WithWeight(v, new_weight);
  const ElementSet rest = b.Without(v);
  const ElementSet candidates = ElementSet::Range(m.ground_size()).Minus(rest);
  std::optional<int> u = FindFreeElement(m, lowered, rest, candidates);
  if (!u) throw InputError("basis update input is not a basis");
  return rest.With(*u);
}

}  // namespace swapround
