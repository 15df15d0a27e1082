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

#include "swapround/fixtures.h"

#include <algorithm>
#include <stdexcept>

namespace swapround::fixtures {

GraphicMatroid Triangle() { return GraphicMatroid(3, {{0, 1}, {1, 2}, {0, 2}}); }

GraphicMatroid Wheel(int rim) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < rim; ++i) edges.emplace_back(i, (i + 1) % rim);
  for (int i = 0; i < rim; ++i) edges.emplace_back(i, rim);
  return GraphicMatroid(rim + 1, std::move(edges));
}

CoverageFunction Coverage12() {
  return CoverageFunction(20, {{0, 1, 2, 3},
                               {2, 3, 4},
                               {4, 5, 6, 7},
                               {0, 7, 8},
                               {8, 9, 10},
                               {1, 9, 11, 12},
                               {12, 13, 14},
                               {3, 10, 14, 15},
                               {15, 16, 17},
                               {5, 11, 16, 18},
                               {17, 18, 19},
                               {0, 6, 13, 19}});
}

PartitionMatroid Partition12() {
  return PartitionMatroid(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}},
                          {2, 1, 2});
}

std::vector<ElementSet> DistinctRandomBases(const Matroid& m, int count,
                                            std::uint64_t seed) {
  CountedMatroid counted(m);
  Rng rng(seed);
  std::vector<ElementSet> bases;
  for (int attempt = 0; static_cast<int>(bases.size()) < count; ++attempt) {
    if (attempt > 1000 * count) {
      throw std::runtime_error("matroid has too few distinct bases");
    }
    ElementSet b = RandomBasis(counted, rng);
    if (std::find(bases.begin(), bases.end(), b) == bases.end()) {
      bases.push_back(std::move(b));
    }
  }
  return bases;
}

}  // namespace swapround::fixtures
