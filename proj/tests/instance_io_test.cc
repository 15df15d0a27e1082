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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "swapround/errors.h"

namespace swapround {
namespace {

using nlohmann::json;

TEST(ParseMatroidTest, AllTypes) {
  MatroidInstance u = ParseMatroid(json::parse(R"({"type":"uniform","n":4,"rank":2})"));
  EXPECT_EQ(u.matroid->kind(), MatroidKind::kUniform);
  EXPECT_EQ(u.matroid->Rank(ElementSet::Range(4).members()), 2);

  MatroidInstance p = ParseMatroid(json::parse(
      R"({"type":"partition","n":4,"parts":[[0,1],[2,3]],"capacities":[1,1]})"));
  EXPECT_EQ(p.matroid->Rank(ElementSet{0, 1, 2}.members()), 2);

  MatroidInstance g = ParseMatroid(json::parse(
      R"({"type":"graphic","n":3,"edges":[[0,1],[1,2],[0,2]],
          "labels":["ab","bc","ac"]})"));
  EXPECT_FALSE(g.matroid->IsIndependent(ElementSet{0, 1, 2}.members()));
  EXPECT_EQ(g.labels, (std::vector<std::string>{"ab", "bc", "ac"}));

  MatroidInstance l = ParseMatroid(json::parse(
      R"({"type":"linear_gf2","n":3,"matrix":[[1,0,1],[0,1,1]]})"));
  EXPECT_FALSE(l.matroid->IsIndependent(ElementSet{0, 1, 2}.members()));
  EXPECT_TRUE(l.matroid->IsIndependent(ElementSet{0, 2}.members()));
}

TEST(ParseMatroidTest, MalformedInstances) {
  for (const char* text : {
           R"([1,2])",
           R"({"n":4,"rank":2})",
           R"({"type":"uniform","rank":2})",
           R"({"type":"uniform","n":"four","rank":2})",
           R"({"type":"uniform","n":4,"rank":5})",
           R"({"type":"uniform","n":0,"rank":0})",
           R"({"type":"matching","n":4})",
           R"({"type":"graphic","n":2,"edges":[[0,1]]})",
           R"({"type":"graphic","n":1,"edges":[[0,1,2]]})",
           R"({"type":"graphic","n":1,"edges":[[0,-1]]})",
           R"({"type":"linear_gf2","n":2,"matrix":[[1,0,1]]})",
           R"({"type":"uniform","n":2,"rank":1,"labels":["a"]})",
       }) {
    EXPECT_THROW(ParseMatroid(json::parse(text)), InputError) << text;
  }
}

TEST(ParseObjectiveTest, AllTypes) {
  auto cover = ParseObjective(
      json::parse(R"({"type":"coverage","universe":4,"sets":[[1,2],[2,3]]})"),
      std::nullopt);
  EXPECT_EQ(cover->Evaluate(ElementSet{0, 1}.members()), 3.0);

  auto facility = ParseObjective(
      json::parse(R"({"type":"facility_location","weights":[[1,3],[2,0.5]]})"),
      std::nullopt);
  EXPECT_EQ(facility->Evaluate(ElementSet{0, 1}.members()), 5.0);

  auto capped = ParseObjective(
      json::parse(R"({"type":"concave_card","cap":2})"), 5);
  EXPECT_EQ(capped->ground_size(), 5);
  EXPECT_EQ(capped->Evaluate(ElementSet{0, 1, 2}.members()), 2.0);

  auto modular = ParseObjective(
      json::parse(R"({"type":"modular","weights":[1,5,3]})"), std::nullopt);
  EXPECT_EQ(modular->Evaluate(ElementSet{1, 2}.members()), 8.0);

  auto table = ParseObjective(
      json::parse(R"({"type":"table","values":[0,2,2,3]})"), std::nullopt);
  EXPECT_EQ(table->Evaluate(ElementSet{0, 1}.members()), 3.0);
}

TEST(ParseObjectiveTest, MalformedObjectives) {
  EXPECT_THROW(ParseObjective(json::parse(R"({"type":"concave_card","cap":2})"),
                              std::nullopt),
               InputError);
  EXPECT_THROW(ParseObjective(json::parse(R"({"type":"entropy"})"), 3),
               InputError);
  EXPECT_THROW(
      ParseObjective(json::parse(R"({"type":"coverage","universe":2,"sets":[[3]]})"),
                     std::nullopt),
      InputError);
  EXPECT_THROW(ParseObjective(json::parse(R"("coverage")"), 3), InputError);
}

class InstanceFileTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           (std::string("swapround_io_") +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path Write(const std::string& name,
                              const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

TEST_F(InstanceFileTest, LoadsFromDisk) {
  const auto path = Write("u.json", R"({"type":"uniform","n":4,"rank":2})");
  EXPECT_EQ(LoadMatroid(path).matroid->ground_size(), 4);
}

TEST_F(InstanceFileTest, MissingAndUnparsableFiles) {
  EXPECT_THROW(LoadMatroid(dir_ / "absent.json"), InputError);
  const auto bad = Write("bad.json", "{\"type\": ");
  EXPECT_THROW(LoadMatroid(bad), InputError);
  EXPECT_THROW(LoadObjective(bad, 3), InputError);
}

}  // namespace
}  // namespace swapround
