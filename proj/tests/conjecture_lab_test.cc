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

#include "rainbow/conjecture_lab.h"
#include "rainbow/errors.h"
#include "rainbow/io.h"
#include "rainbow/rainbow_matching.h"
#include "support/oracles.h"

namespace rainbow {
namespace {

using Rows = std::vector<std::vector<int>>;

TEST(LatinTransversalTest, Examples) {
  EXPECT_EQ(MaxLatinTransversal(LatinSquare(Rows{{1}})).size(), 1);
  const LatinSquare two(Rows{{1, 2}, {2, 1}});
  EXPECT_EQ(MaxLatinTransversal(two).size(), 1);
  const LatinSquare cyclic = LatinSquare::Cyclic(4);
  const Transversal best = MaxLatinTransversal(cyclic);
  EXPECT_EQ(best.size(), 3);
  EXPECT_TRUE(IsTransversal(cyclic, best));
  EXPECT_EQ(testing::BruteMaxLatinTransversal(cyclic), 3);
}

TEST(LatinTransversalTest, AgreesWithBruteForceOnOrderFour) {
  for (const LatinSquare& square : ReducedLatinSquares(4)) {
    const Transversal best = MaxLatinTransversal(square);
    ASSERT_TRUE(IsTransversal(square, best));
    ASSERT_EQ(best.size(), testing::BruteMaxLatinTransversal(square));
  }
}

TEST(ReducedLatinSquaresTest, Counts) {
  EXPECT_EQ(ReducedLatinSquares(1).size(), 1u);
  EXPECT_EQ(ReducedLatinSquares(3).size(), 2u);
  EXPECT_EQ(ReducedLatinSquares(4).size(), 24u);
  EXPECT_EQ(ReducedLatinSquares(5).size(), 1344u);
  EXPECT_THROW(ReducedLatinSquares(5, 100), CapExceeded);
}

TEST(CheckBrsTest, SmallOrders) {
  SweepSpec spec;
  spec.conjecture = "brs";
  spec.mode = SweepMode::kExhaustive;
  spec.instance_cap = 100000;
  for (int n = 1; n <= 4; ++n) {
    const SweepReport report = CheckBrs(n, spec);
    EXPECT_EQ(report.verdict, Verdict::kVerified) << n;
  }
}

TEST(ShortCycleTest, Examples) {
  const Graph digon(2, {{0, 1}, {0, 1}});
  EXPECT_TRUE(RainbowShortCycle(digon, {{0}, {1}}, 2).has_value());
  EXPECT_FALSE(RainbowShortCycle(digon, {{0, 1}}, 2).has_value());
  const Graph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto found = RainbowShortCycle(tri, {{0}, {1}, {2}}, 3);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->edges.size(), 3u);
  const Graph forest(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_FALSE(RainbowShortCycle(forest, {{0}, {1}, {2}}, 4).has_value());
  EXPECT_THROW(RainbowShortCycle(tri, {{0, 1}, {1}}, 3), InputError);
  EXPECT_THROW(RainbowShortCycle(tri, {{0}, {1}, {}}, 3, true), HypothesisError);
}

TEST(RotaTest, Examples) {
  const RotaResult one = RotaScrambledSearch(Matroid::Free(1), {{0}});
  EXPECT_TRUE(one.conjecture_holds);
  EXPECT_EQ(one.cover.size, 1);
  // Two disjoint bases {0,1} and {2,3} of the uniform rank-2 matroid.
  const RotaResult two = RotaScrambledSearch(Matroid::Uniform(4, 2), {{0, 1}, {2, 3}});
  EXPECT_EQ(two.cover.size, 2);
  EXPECT_TRUE(two.within_n);
  EXPECT_THROW(RotaScrambledSearch(Matroid::Uniform(4, 1), {{0, 1}, {2, 3}}),
               HypothesisError);
}

SweepSpec Spec(const std::string& tag, std::map<std::string, std::string> params,
               std::int64_t cap, SweepMode mode = SweepMode::kRandom) {
  SweepSpec spec;
  spec.conjecture = tag;
  spec.params = std::move(params);
  spec.instance_cap = cap;
  spec.mode = mode;
  spec.seed = 7;
  return spec;
}

TEST(ConjectureSweepTest, TheoremsAreVerified) {
  for (const auto& spec :
       {Spec("drisko", {{"n", "3"}}, 50), Spec("stairs", {{"n", "3"}}, 50),
        Spec("repeats", {{"k", "2"}, {"n", "3"}}, 50),
        Spec("arrow", {{"a", "3"}, {"b", "2"}, {"c", "2"}}, 50),
        Spec("sequence", {{"sizes", "1,3,5"}, {"n", "3"}}, 50),
        Spec("weighted-drisko", {{"n", "2"}}, 50),
        Spec("rota", {{"n", "2"}}, 20), Spec("two-cover", {}, 30),
        Spec("short-cycle", {{"n", "6"}, {"r", "3"}}, 30)}) {
    const SweepReport report = RunConjectureSweep(spec);
    EXPECT_NE(report.verdict, Verdict::kCounterexample) << spec.conjecture;
    EXPECT_GT(report.instances_tested, 0) << spec.conjecture;
  }
}

TEST(ConjectureSweepTest, WeightedDriskoExhaustiveSmall) {
  const SweepReport report = RunConjectureSweep(
      Spec("weighted-drisko", {{"n", "2"}, {"wmax", "2"}}, 1000000, SweepMode::kExhaustive));
  EXPECT_EQ(report.verdict, Verdict::kVerified);
}

TEST(ConjectureSweepTest, CounterexamplesReverifyFromTheirInstance) {
  const SweepReport report =
      RunConjectureSweep(Spec("arrow", {{"a", "2"}, {"b", "2"}, {"c", "2"}}, 200));
  ASSERT_EQ(report.verdict, Verdict::kCounterexample);
  const Instance instance = ParseInstance(report.counterexample->instance);
  const EdgeFamily family(*instance.graph, *instance.colors);
  EXPECT_LT(testing::BruteMaxRainbowMatching(family), 2);
}

TEST(ConjectureSweepTest, ReproducibleAcrossWorkerCounts) {
  auto run = [](int workers) {
    SweepSpec spec = Spec("drisko", {{"n", "3"}}, 100);
    spec.workers = workers;
    std::vector<std::string> lines;
    const SweepReport report = RunConjectureSweep(
        spec, [&](const SweepRecord& r) { lines.push_back(ToJson(r).dump()); });
    lines.push_back(ToJson(report).dump());
    return lines;
  };
  EXPECT_EQ(run(1), run(4));
}

TEST(ConjectureSweepTest, RejectsBadSpecs) {
  EXPECT_THROW(RunConjectureSweep(Spec("nope", {}, 10)), InputError);
  EXPECT_THROW(RunConjectureSweep(Spec("drisko", {}, 0)), InputError);
  EXPECT_THROW(RunConjectureSweep(Spec("scrambled-sharpness", {{"n", "3"}}, 10)),
               InputError);
  EXPECT_THROW(RunConjectureSweep(Spec("drisko", {{"n", "x"}}, 10)), InputError);
}

TEST(ConjectureSweepTest, ScrambledSharpnessRecordsAreConsistent) {
  const SweepReport report =
      RunConjectureSweep(Spec("scrambled-sharpness", {{"n", "4"}}, 20));
  EXPECT_EQ(report.instances_tested > 0, true);
  if (report.counterexample) {
    const Instance instance = ParseInstance(report.counterexample->instance);
    ASSERT_TRUE(instance.graph && instance.scrambling);
    const EdgeFamily scrambled(*instance.graph, *instance.scrambling);
    EXPECT_LT(testing::BruteMaxRainbowMatching(scrambled), 4);
  }
}

}  // namespace
}  // namespace rainbow
