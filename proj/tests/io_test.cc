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

#include <gtest/gtest.h>

#include "rainbow/errors.h"
#include "rainbow/io.h"

namespace rainbow {
namespace {

std::string ErrorOf(std::string_view text) {
  try {
    ParseInstance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseInstanceTest, MinimalGraph) {
  const Instance instance = ParseInstance(std::string_view(R"({"graph":{"n":2,"edges":[[0,1]]}})"));
  ASSERT_TRUE(instance.graph.has_value());
  EXPECT_EQ(instance.graph->num_edges(), 1);
  EXPECT_FALSE(instance.network.has_value());
}

TEST(ParseInstanceTest, PathAddressedErrors) {
  EXPECT_EQ(ErrorOf(R"({"graph":{"n":2,"edges":[[0,1],[0,5]]}})"),
            "/graph/edges/1: endpoint out of range");
  EXPECT_EQ(ErrorOf(R"({"graph":{"edges":[]}})"), "/graph: missing field 'n'");
  EXPECT_EQ(ErrorOf(R"({"colors":[[0],["a"]]})"), "/colors/1/0: expected an integer");
  EXPECT_NE(ErrorOf("{"), "");
  EXPECT_NE(ErrorOf("[]"), "");
}

TEST(ParseInstanceTest, InvariantErrorsAreNamed) {
  const std::string latin = ErrorOf(R"({"latin":[[1,2],[1,2]]})");
  EXPECT_NE(latin.find("/latin"), std::string::npos);
  EXPECT_NE(latin.find("cell"), std::string::npos);
  const std::string net =
      ErrorOf(R"({"network":{"n":3,"sources":[0],"targets":[2],"edges":[[1,0]]}})");
  EXPECT_NE(net.find("network invariant"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"network":{"n":2,"sources":[0],"targets":[1],"edges":[[0,1]]},
                       "weights":[1,2]})"),
            "");
  EXPECT_NE(ErrorOf(R"({"ground_size":2,"colors":[[0,3]]})"), "");
  EXPECT_NE(ErrorOf(R"({"weights":[-1]})"), "");
}

TEST(ParseMatroidTest, AllKinds) {
  const auto parse = [](std::string_view text) {
    return ParseMatroid(nlohmann::json::parse(text), 4);
  };
  EXPECT_EQ(parse(R"({"kind":"uniform","k":2})").kind(), "uniform");
  EXPECT_EQ(parse(R"({"kind":"free"})").ground_size(), 4);
  EXPECT_EQ(parse(R"({"kind":"partition","parts":[[0,1],[2,3]]})").kind(), "partition");
  EXPECT_EQ(parse(R"({"kind":"graphic","graph":{"n":3,"edges":[[0,1],[1,2]]}})")
                .ground_size(),
            2);
  EXPECT_EQ(parse(R"({"kind":"binary","matrix":[[1,0,1],[0,1,1]]})").ground_size(), 3);
  EXPECT_EQ(parse(R"({"kind":"truncation","k":1,"base":{"kind":"free"}})").kind(),
            "truncation");
  EXPECT_EQ(parse(R"({"kind":"direct-sum","first":{"kind":"free","ground_size":1},
                      "second":{"kind":"uniform","k":1,"ground_size":2}})")
                .ground_size(),
            3);
  EXPECT_THROW(parse(R"({"kind":"mystery"})"), InputError);
  EXPECT_THROW(parse(R"({"kind":"partition","parts":[[0,1],[1]]})"), InputError);
}

TEST(ToJsonTest, MatroidRoundTrip) {
  const Matroid original = Matroid::DirectSum(
      Matroid::Truncate(Matroid::Binary(BinaryMatrix::FromRows({{1, 0, 1}, {0, 1, 1}})), 1),
      Matroid::Partition(3, {{0, 1}}, {1}));
  const Matroid copy = ParseMatroid(ToJson(original), std::nullopt);
  ASSERT_EQ(copy.ground_size(), original.ground_size());
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    Subset s;
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1) s.Insert(i);
    }
    EXPECT_EQ(copy.IsIndependent(s), original.IsIndependent(s));
  }
}

TEST(ToJsonTest, GraphAndNetworkRoundTrip) {
  const Graph g(4, {{0, 2}, {1, 3}}, {0, 0, 1, 1});
  nlohmann::json doc = {{"graph", ToJson(g)}};
  const Instance back = ParseInstance(doc);
  EXPECT_EQ(ToJson(*back.graph), ToJson(g));
  const Network net(3, {{0, 1}, {1, 2}}, {0}, {2});
  doc = {{"network", ToJson(net)}};
  EXPECT_EQ(ToJson(*ParseInstance(doc).network), ToJson(net));
}

}  // namespace
}  // namespace rainbow
