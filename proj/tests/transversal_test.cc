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

#include <variant>

#include <gtest/gtest.h>

#include "rainbow/conjecture_lab.h"
#include "rainbow/errors.h"
#include "rainbow/transversal.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace rainbow {
namespace {

bool Full(const RainbowOutcome& outcome) {
  return std::holds_alternative<ChoiceFunction>(outcome);
}

TEST(HallRainbowTest, Examples) {
  const ColoredFamily single(1, {{0}});
  const auto one = HallRainbow(single);
  ASSERT_TRUE(Full(one));
  EXPECT_EQ(std::get<ChoiceFunction>(one).At(0), 0);

  const auto clash = HallRainbow(ColoredFamily(1, {{0}, {0}}));
  ASSERT_FALSE(Full(clash));
  EXPECT_EQ(std::get<Violator>(clash).colors, (std::vector<int>{0, 1}));

  const ColoredFamily triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto tri = HallRainbow(triangle);
  ASSERT_TRUE(Full(tri));
  EXPECT_TRUE(IsRainbow(triangle, std::get<ChoiceFunction>(tri)));
}

TEST(RadoRainbowTest, Examples) {
  const auto free = RadoRainbow(ColoredFamily(2, {{0, 1}}), Matroid::Free(2));
  ASSERT_TRUE(Full(free));
  const auto rank_one = RadoRainbow(ColoredFamily(2, {{0}, {1}}), Matroid::Uniform(2, 1));
  ASSERT_FALSE(Full(rank_one));
  EXPECT_EQ(std::get<Violator>(rank_one).colors, (std::vector<int>{0, 1}));

  // Three spanning trees of K4 (edges 01 02 03 12 13 23).
  const Matroid k4 =
      Matroid::Graphic(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  const std::vector<std::vector<int>> trees{{0, 1, 2}, {0, 3, 5}, {2, 4, 5}};
  const ColoredFamily family(6, trees);
  const auto base = RadoRainbow(family, k4);
  ASSERT_TRUE(Full(base));
  const ChoiceFunction& f = std::get<ChoiceFunction>(base);
  EXPECT_TRUE(IsRainbow(family, f));
  EXPECT_TRUE(k4.IsIndependent(std::vector<int>(f.Image())));
  EXPECT_TRUE(testing::BruteIndependentRainbow(trees, k4));
  EXPECT_THROW(RadoRainbow(ColoredFamily(7, {{6}}), k4), InputError);
}

TEST(HallRainbowTest, OutcomesAgreeWithBruteForce) {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const int ground = rng.Between(0, 8);
    const int colors = rng.Between(0, 6);
    const auto sets = testing::RandomSets(rng, ground, colors, rng.Between(1, 3), 5);
    const ColoredFamily family(ground, sets);
    const auto outcome = HallRainbow(family);
    const bool brute = testing::BruteFullRainbow(sets);
    ASSERT_EQ(Full(outcome), brute) << "trial " << trial;
    if (Full(outcome)) {
      const auto& f = std::get<ChoiceFunction>(outcome);
      ASSERT_TRUE(IsRainbow(family, f));
      ASSERT_TRUE(f.IsFull(colors));
    } else {
      ASSERT_TRUE(testing::IsHallViolator(sets, std::get<Violator>(outcome).colors));
    }
  }
}

TEST(RadoRainbowTest, SingletonPartitionCoincidesWithHall) {
  Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const int ground = rng.Between(1, 8);
    const int colors = rng.Between(0, 6);
    const auto sets = testing::RandomSets(rng, ground, colors, 1, 3);
    std::vector<std::vector<int>> parts;
    for (int x = 0; x < ground; ++x) parts.push_back({x});
    const Matroid singletons = Matroid::Partition(ground, parts,
                                                  std::vector<int>(ground, 1));
    const ColoredFamily family(ground, sets);
    const auto hall = HallRainbow(family);
    const auto rado = RadoRainbow(family, singletons);
    ASSERT_EQ(Full(hall), Full(rado));
    if (!Full(hall)) {
      ASSERT_TRUE(testing::IsHallViolator(sets, std::get<Violator>(rado).colors));
    }
  }
}

TEST(RadoRainbowTest, OutcomesAgreeWithBruteForce) {
  Rng rng(33);
  for (int trial = 0; trial < 1500; ++trial) {
    const int ground = rng.Between(1, 8);
    const int colors = rng.Between(0, 6);
    const Matroid m = RandomMatroid(ground, rng);
    const auto sets = testing::RandomSets(rng, ground, colors, rng.Between(1, 3), 5);
    const ColoredFamily family(ground, sets);
    const auto outcome = RadoRainbow(family, m);
    ASSERT_EQ(Full(outcome), testing::BruteIndependentRainbow(sets, m))
        << "trial " << trial << " kind " << m.kind();
    if (Full(outcome)) {
      const auto& f = std::get<ChoiceFunction>(outcome);
      ASSERT_TRUE(IsRainbow(family, f));
      ASSERT_TRUE(f.IsFull(colors));
      ASSERT_TRUE(m.IsIndependent(std::vector<int>(f.Image())));
    } else {
      ASSERT_TRUE(testing::IsRadoViolator(sets, m, std::get<Violator>(outcome).colors));
    }
  }
}

}  // namespace
}  // namespace rainbow
