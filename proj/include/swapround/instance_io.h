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

#ifndef SWAPROUND_INSTANCE_IO_H_
#define SWAPROUND_INSTANCE_IO_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "swapround/matroid.h"
#include "swapround/submodular.h"

namespace swapround {

// A matroid read from JSON, plus optional element labels.
//
//   {"type": "uniform",    "n": 4, "rank": 2}
//   {"type": "partition",  "n": 4, "parts": [[0,1],[2,3]], "capacities": [1,1]}
//   {"type": "graphic",    "n": 3, "edges": [[0,1],[1,2],[0,2]]}
//   {"type": "linear_gf2", "n": 3, "matrix": [[1,0,1],[0,1,1]]}
//
// "labels" (optional) names each element; index i is the i-th label.
struct MatroidInstance {
  std::unique_ptr<Matroid> matroid;
  std::vector<std::string> labels;
};

//   {"type": "coverage", "universe": 4, "sets": [[1,2],[2,3]]}
//   {"type": "facility_location", "weights": [[...], ...]}
//   {"type": "concave_card", "cap": 2}          ("n" optional)
//   {"type": "table", "values": [f(0), f({0}), f({1}), f({0,1}), ...]}
//
// concave_card takes its ground-set size from "n" or, failing that, from
// `ground_size_hint`.
std::unique_ptr<SubmodularFunction> ParseObjective(
    const nlohmann::json& doc, std::optional<int> ground_size_hint);

MatroidInstance ParseMatroid(const nlohmann::json& doc);

// Read and parse a file; InputError on I/O, syntax or schema problems.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);
MatroidInstance LoadMatroid(const std::filesystem::path& path);
std::unique_ptr<SubmodularFunction> LoadObjective(
    const std::filesystem::path& path, std::optional<int> ground_size_hint);

}  // namespace swapround

#endif  // SWAPROUND_INSTANCE_IO_H_
