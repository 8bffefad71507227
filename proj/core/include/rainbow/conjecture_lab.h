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

#ifndef RAINBOW_CONJECTURE_LAB_H_
#define RAINBOW_CONJECTURE_LAB_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.h"
#include "rainbow/latin.h"
#include "rainbow/matroid.h"
#include "rainbow/rng.h"
#include "rainbow/span_cycles.h"
#include "rainbow/sweep.h"

namespace rainbow {

// Maximum partial transversal by row-wise branch and bound over column and
// symbol masks. Orders up to 64.
Transversal MaxLatinTransversal(const LatinSquare& square);

// Every Latin square of order n whose first row is 1..n, in lexicographic
// order. Throws CapExceeded past `cap` squares.
std::vector<LatinSquare> ReducedLatinSquares(int n, std::int64_t cap = 2000000);

// Transversal of size >= n-1 in every square of order n, and of size n when
// n is odd. Squares are enumerated with the first row normalized, which
// preserves transversal sizes; the report's range counts both.
SweepReport CheckBrs(int n, const SweepSpec& spec, const RecordSink& sink = {});

struct RotaResult {
  Cover cover;             // minimum partition into rainbow independent sets
  bool within_n_plus_one = false;
  bool within_n = false;
  bool conjecture_holds = false;  // n + 1 always, n when n is even
};

// `parts` are n disjoint sets of size n covering the ground of `matroid`,
// whose covering number must be n. Ground size at most 16.
RotaResult RotaScrambledSearch(const Matroid& matroid,
                               const std::vector<std::vector<int>>& parts);

// Rainbow cycle of length at most r among edges of the classes, which must
// be disjoint. When `conjecture_mode` holds the instance must have as many
// classes as vertices, each of size at least ceil(n / r).
std::optional<RainbowCycle> RainbowShortCycle(const Graph& graph,
                                              const std::vector<std::vector<int>>& classes,
                                              int r, bool conjecture_mode = false);

// A matroid on `ground` elements drawn from uniform, partition, graphic,
// binary and truncated constructions.
Matroid RandomMatroid(int ground, Rng& rng);

// Dispatches a sweep by spec.conjecture:
//   drisko (n), stairs (n), repeats (k, n), arrow (a, b, c, class,
//   vertices), sequence (sizes, n, vertices), brs (n), rota (n),
//   weighted-drisko (n, wmax, side), short-cycle (n, r, p),
//   scrambled-sharpness (n), two-cover (ground).
SweepReport RunConjectureSweep(const SweepSpec& spec, const RecordSink& sink = {});

}  // namespace rainbow

#endif  // RAINBOW_CONJECTURE_LAB_H_
