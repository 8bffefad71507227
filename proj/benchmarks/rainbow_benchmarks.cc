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

#include <vector>

#include <benchmark/benchmark.h>

#include "rainbow/coercive_search.h"
#include "rainbow/conjecture_lab.h"
#include "rainbow/ground.h"
#include "rainbow/latin.h"
#include "rainbow/network.h"
#include "rainbow/network_paths.h"
#include "rainbow/rainbow_matching.h"
#include "rainbow/rng.h"
#include "rainbow/transversal.h"

namespace rainbow {
namespace {

void BM_MaxRainbowMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const EdgeFamily family =
      RandomBipartiteMatchings(std::vector<int>(2 * n - 1, n), n + 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(MaxRainbowMatching(family).size());
}
BENCHMARK(BM_MaxRainbowMatching)->DenseRange(2, 5);

void BM_HallRainbow(benchmark::State& state) {
  const int colors = static_cast<int>(state.range(0));
  Rng rng(11);
  std::vector<std::vector<int>> sets(colors);
  for (auto& set : sets) set = rng.Sample(2 * colors, rng.Between(1, colors));
  const ColoredFamily family(2 * colors, sets);
  for (auto _ : state) benchmark::DoNotOptimize(HallRainbow(family).index());
}
BENCHMARK(BM_HallRainbow)->RangeMultiplier(2)->Range(4, 64);

void BM_NuP(benchmark::State& state) {
  const int layers = static_cast<int>(state.range(0));
  const int width = 4;
  // Layered grid: sources, `layers` inner layers, targets, complete between
  // consecutive layers.
  const int n = width * (layers + 2);
  std::vector<Arc> arcs;
  for (int l = 0; l + 1 < layers + 2; ++l) {
    for (int a = 0; a < width; ++a) {
      for (int b = 0; b < width; ++b) arcs.push_back({l * width + a, (l + 1) * width + b});
    }
  }
  std::vector<int> sources, targets, all;
  for (int a = 0; a < width; ++a) {
    sources.push_back(a);
    targets.push_back(n - width + a);
  }
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) all.push_back(i);
  const Network net(n, std::move(arcs), sources, targets);
  for (auto _ : state) benchmark::DoNotOptimize(NuP(net, all).size);
}
BENCHMARK(BM_NuP)->DenseRange(1, 7, 2);

void BM_MaxLatinTransversal(benchmark::State& state) {
  const LatinSquare square = LatinSquare::Cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MaxLatinTransversal(square).size());
}
BENCHMARK(BM_MaxLatinTransversal)->DenseRange(4, 8);

}  // namespace
}  // namespace rainbow

BENCHMARK_MAIN();
