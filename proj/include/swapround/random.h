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

#ifndef SWAPROUND_RANDOM_H_
#define SWAPROUND_RANDOM_H_

#include <cstdint>
#include <random>

namespace swapround {

// All randomized routines draw from a caller-owned generator of this type.
using Rng = std::mt19937_64;

inline bool FlipCoin(Rng& rng, double heads_probability) {
  return std::bernoulli_distribution(heads_probability)(rng);
}

// Uniform index in [0, n).
inline int UniformIndex(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

// Independent stream for trial `index` of an experiment seeded with `seed`.
inline Rng TrialRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

}  // namespace swapround

#endif  // SWAPROUND_RANDOM_H_
