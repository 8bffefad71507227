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

#include <functional>
#include <numeric>

#include <gtest/gtest.h>

#include "rainbow/coercive_search.h"
#include "rainbow/errors.h"
#include "rainbow/io.h"
#include "support/oracles.h"

namespace rainbow {
namespace {

SweepSpec CycleSpec(const std::string& hosts) {
  SweepSpec spec;
  spec.conjecture = "sequence";
  spec.mode = SweepMode::kCycles;
  spec.instance_cap = 50000000;
  spec.params = {{"vertices", "8"}, {"hosts", hosts}};
  return spec;
}

int CountComponents(const Graph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::vector<char> touched(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    parent[find(e.u)] = find(e.v);
    touched[e.u] = touched[e.v] = 1;
  }
  int count = 0;
  for (int v = 0; v < g.num_vertices(); ++v) count += touched[v] && find(v) == v;
  return count;
}

TEST(CounterexampleSearchTest, TwoFourFourNeedsTwoSquares) {
  const SizeSequence sequence{{2, 4, 4}, 3};
  const SweepReport found =
      CounterexampleSearch(sequence, GraphClass::kBipartite, CycleSpec("all"));
  ASSERT_EQ(found.verdict, Verdict::kCounterexample);
  const Instance instance = ParseInstance(found.counterexample->instance);
  const EdgeFamily witness(*instance.graph, *instance.colors);
  EXPECT_EQ(testing::BruteMaxRainbowMatching(witness), 2);
  EXPECT_FALSE(CheckSequenceInstance(sequence, witness));
  EXPECT_EQ(CountComponents(witness.graph()), 2);
  for (int v = 0; v < witness.graph().num_vertices(); ++v) {
    int degree = 0;
    for (const Edge& e : witness.graph().edges()) degree += e.Touches(v);
    EXPECT_TRUE(degree == 0 || degree == 2);
  }
  EXPECT_EQ(witness.graph().num_edges(), 8);

  const SweepReport single =
      CounterexampleSearch(sequence, GraphClass::kBipartite, CycleSpec("single"));
  EXPECT_EQ(single.verdict, Verdict::kVerified);
  EXPECT_GT(single.instances_tested, 0);
}

TEST(CounterexampleSearchTest, CoercingSequencesSurviveRandomSearch) {
  SweepSpec spec;
  spec.mode = SweepMode::kRandom;
  spec.seed = 1;
  spec.instance_cap = 2000;
  const SweepReport odd = CounterexampleSearch({{1, 3, 5}, 3}, GraphClass::kBipartite, spec);
  EXPECT_EQ(odd.verdict, Verdict::kVerified);
  EXPECT_EQ(odd.instances_tested, 2000);
}

TEST(CounterexampleSearchTest, ExhaustiveSmallBipartiteRange) {
  SweepSpec spec;
  spec.mode = SweepMode::kExhaustive;
  spec.instance_cap = 5000000;
  spec.params = {{"vertices", "4"}};
  const SweepReport report =
      CounterexampleSearch({{3, 3, 3}, 2}, GraphClass::kBipartite, spec);
  EXPECT_EQ(report.verdict, Verdict::kVerified);
  // Two matchings of size 2 cannot coerce a rainbow matching of size 2.
  const SweepReport broken =
      CounterexampleSearch({{2, 2}, 2}, GraphClass::kBipartite, spec);
  EXPECT_EQ(broken.verdict, Verdict::kCounterexample);
}

TEST(CounterexampleSearchTest, SameSeedSameReport) {
  SweepSpec spec;
  spec.mode = SweepMode::kRandom;
  spec.seed = 99;
  spec.instance_cap = 300;
  spec.workers = 3;
  std::vector<std::string> first, second;
  CounterexampleSearch({{2, 2, 2}, 2}, GraphClass::kBipartite, spec,
                       [&](const SweepRecord& r) { first.push_back(ToJson(r).dump()); });
  spec.workers = 1;
  CounterexampleSearch({{2, 2, 2}, 2}, GraphClass::kBipartite, spec,
                       [&](const SweepRecord& r) { second.push_back(ToJson(r).dump()); });
  EXPECT_EQ(first, second);
}

TEST(RandomBipartiteMatchingsTest, ProducesMatchingsOfTheRequestedSizes) {
  Rng rng(5);
  const EdgeFamily family = RandomBipartiteMatchings({1, 2, 3}, 3, rng);
  ASSERT_EQ(family.num_colors(), 3);
  for (int c = 0; c < 3; ++c) {
    EXPECT_EQ(static_cast<int>(family.color(c).size()), c + 1);
    EXPECT_TRUE(IsMatching(family.graph(), family.color(c)));
  }
  EXPECT_TRUE(family.graph().IsBipartite());
  EXPECT_THROW(RandomBipartiteMatchings({4}, 3, rng), InputError);
}

}  // namespace
}  // namespace rainbow
