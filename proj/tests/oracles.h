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

// Brute-force reference implementations used as test oracles. They only
// call the uncounted base oracles and never reuse library algorithms.

#ifndef SWAPROUND_TESTS_ORACLES_H_
#define SWAPROUND_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "swapround/element_set.h"
#include "swapround/matroid.h"

namespace swapround::testing {

inline bool Independent(const Matroid& m, const ElementSet& s) {
  return m.IsIndependent(s.members());
}

// All subsets of the ground set (n <= 20) as element sets.
inline std::vector<ElementSet> AllSubsets(int n) {
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(ElementSet::FromMask(mask, n));
  }
  return out;
}

inline std::vector<ElementSet> AllBases(const Matroid& m) {
  std::vector<ElementSet> independent;
  int rank = 0;
  for (const ElementSet& s : AllSubsets(m.ground_size())) {
    if (!Independent(m, s)) continue;
    rank = std::max(rank, s.size());
    independent.push_back(s);
  }
  std::vector<ElementSet> bases;
  for (const ElementSet& s : independent) {
    if (s.size() == rank) bases.push_back(s);
  }
  return bases;
}

// Size of the largest independent subset of s, by enumeration.
inline int BruteRank(const Matroid& m, const ElementSet& s) {
  const std::vector<int> members(s.begin(), s.end());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size());
       ++mask) {
    std::vector<int> subset;
    for (size_t i = 0; i < members.size(); ++i) {
      if (mask >> i & 1) subset.push_back(members[i]);
    }
    if (static_cast<int>(subset.size()) > best && m.IsIndependent(subset)) {
      best = static_cast<int>(subset.size());
    }
  }
  return best;
}

// Every x in t with s - x + u independent.
inline std::vector<int> ExchangeCandidates(const Matroid& m,
                                           const ElementSet& s, int u,
                                           const ElementSet& t) {
  std::vector<int> out;
  for (int x : t) {
    if (Independent(m, s.Swap(x, u))) out.push_back(x);
  }
  return out;
}

// The basis whose elements, listed in decreasing weight with index
// tie-break, form the lexicographically smallest sequence. It is the unique
// optimal basis under that strict order.
inline ElementSet BruteMaxWeightBasis(const Matroid& m,
                                      const std::vector<double>& w) {
  auto key = [&](const ElementSet& b) {
    std::vector<std::pair<double, int>> k;
    for (int v : b) k.emplace_back(-w[v], v);
    std::sort(k.begin(), k.end());
    return k;
  };
  std::vector<ElementSet> bases = AllBases(m);
  return *std::min_element(
      bases.begin(), bases.end(),
      [&](const ElementSet& a, const ElementSet& b) { return key(a) < key(b); });
}

}  // namespace swapround::testing

#endif  // SWAPROUND_TESTS_ORACLES_H_
