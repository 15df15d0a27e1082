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

#include "swapround/instance_io.h"

#include <algorithm>
#include <fstream>

#include "swapround/errors.h"

namespace swapround {
namespace {

using nlohmann::json;

const json& Field(const json& doc, const char* name) {
  if (!doc.contains(name)) {
    throw InputError(std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

template <typename T>
T As(const json& doc, const char* name) {
  try {
    return Field(doc, name).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field \"") + name + "\": " + e.what());
  }
}

void CheckSize(int n, int actual, const char* what) {
  if (n != actual) {
    throw InputError(std::string("\"n\" is ") + std::to_string(n) +
                     " but " + what + " gives " + std::to_string(actual));
  }
}

}  // namespace

MatroidInstance ParseMatroid(const json& doc) {
  if (!doc.is_object()) throw InputError("matroid instance must be an object");
  const std::string type = As<std::string>(doc, "type");
  const int n = As<int>(doc, "n");
  if (n < 1) throw InputError("\"n\" must be >= 1");

  MatroidInstance instance;
  if (type == "uniform") {
    instance.matroid =
        std::make_unique<UniformMatroid>(n, As<int>(doc, "rank"));
  } else if (type == "partition") {
    instance.matroid = std::make_unique<PartitionMatroid>(
        n, As<std::vector<std::vector<int>>>(doc, "parts"),
        As<std::vector<int>>(doc, "capacities"));
  } else if (type == "graphic") {
    auto edge_list = As<std::vector<std::vector<int>>>(doc, "edges");
    CheckSize(n, static_cast<int>(edge_list.size()), "\"edges\"");
    std::vector<std::pair<int, int>> edges;
    int vertices = 0;
    for (const auto& e : edge_list) {
      if (e.size() != 2) throw InputError("each edge needs two endpoints");
      if (e[0] < 0 || e[1] < 0) throw InputError("negative edge endpoint");
      edges.emplace_back(e[0], e[1]);
      vertices = std::max({vertices, e[0] + 1, e[1] + 1});
    }
    instance.matroid =
        std::make_unique<GraphicMatroid>(vertices, std::move(edges));
  } else if (type == "linear_gf2") {
    auto rows = As<std::vector<std::vector<int>>>(doc, "matrix");
    auto matroid = std::make_unique<LinearGf2Matroid>(rows);
    CheckSize(n, matroid->ground_size(), "\"matrix\" columns");
    instance.matroid = std::move(matroid);
  } else {
    throw InputError("unknown matroid type \"" + type + "\"");
  }
  if (doc.contains("labels")) {
    instance.labels = As<std::vector<std::string>>(doc, "labels");
    CheckSize(n, static_cast<int>(instance.labels.size()), "\"labels\"");
  }
  return instance;
}

std::unique_ptr<SubmodularFunction> ParseObjective(
    const json& doc, std::optional<int> ground_size_hint) {
  if (!doc.is_object()) throw InputError("objective must be an object");
  const std::string type = As<std::string>(doc, "type");
  if (type == "coverage") {
    return std::make_unique<CoverageFunction>(
        As<int>(doc, "universe"),
        As<std::vector<std::vector<int>>>(doc, "sets"));
  }
  if (type == "facility_location") {
    return std::make_unique<FacilityLocationFunction>(
        As<std::vector<std::vector<double>>>(doc, "weights"));
  }
  if (type == "concave_card") {
    std::optional<int> n = ground_size_hint;
    if (doc.contains("n")) n = As<int>(doc, "n");
    if (!n) throw InputError("concave_card needs \"n\" or a matroid");
    return std::make_unique<ConcaveCardinalityFunction>(*n,
                                                        As<int>(doc, "cap"));
  }
  if (type == "modular") {
    return std::make_unique<ModularFunction>(
        As<std::vector<double>>(doc, "weights"));
  }
  if (type == "table") {
    return std::make_unique<TableFunction>(
        As<std::vector<double>>(doc, "values"));
  }
  throw InputError("unknown objective type \"" + type + "\"");
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

MatroidInstance LoadMatroid(const std::filesystem::path& path) {
  return ParseMatroid(ReadJsonFile(path));
}

std::unique_ptr<SubmodularFunction> LoadObjective(
    const std::filesystem::path& path, std::optional<int> ground_size_hint) {
  return ParseObjective(ReadJsonFile(path), ground_size_hint);
}

}  // namespace swapround
