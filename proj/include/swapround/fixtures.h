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

#ifndef SWAPROUND_FIXTURES_H_
#define SWAPROUND_FIXTURES_H_

#include <cstdint>
#include <vector>

#include "swapround/element_set.h"
#include "swapround/matroid.h"
#include "swapround/submodular.h"

// Small fixed instances shared by the verification suites, the CLI and the
// tests.
namespace swapround::fixtures {

// Edges 0=(0,1), 1=(1,2), 2=(0,2).
GraphicMatroid Triangle();

// Wheel with `rim` rim vertices and a hub: edges 0..rim-1 run around the rim,
// edges rim..2rim-1 are spokes. Rank rim.
GraphicMatroid Wheel(int rim);

// Coverage function on 12 sets over a 20-item universe.
CoverageFunction Coverage12();

// Parts {0..3}, {4..7}, {8..11} with capacities 2, 1, 2; rank 5.
PartitionMatroid Partition12();

// `count` pairwise distinct random bases (greedy over seeded permutations),
// drawn through a throwaway ledger.
std::vector<ElementSet> DistinctRandomBases(const Matroid& m, int count,
                                            std::uint64_t seed);

}  // namespace swapround::fixtures

#endif  // SWAPROUND_FIXTURES_H_
