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

#ifndef RAINBOW_TESTS_SUPPORT_ORACLES_H_
#define RAINBOW_TESTS_SUPPORT_ORACLES_H_

// Exhaustive reference implementations. Each one is written directly from the
// definitions and shares no search code with the library.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/ground.h"
#include "rainbow/graph.h"
#include "rainbow/latin.h"
#include "rainbow/matroid.h"
#include "rainbow/network.h"
#include "rainbow/network_paths.h"
#include "rainbow/rainbow_matching.h"

namespace rainbow::testing {

// Whether colors can receive distinct elements from their own sets.
bool BruteFullRainbow(const std::vector<std::vector<int>>& sets);

// Same, with the image required independent in the matroid.
bool BruteIndependentRainbow(const std::vector<std::vector<int>>& sets,
                             const Matroid& matroid);

// |union of sets[c] for c in colors| < |colors|.
bool IsHallViolator(const std::vector<std::vector<int>>& sets,
                    const std::vector<int>& colors);

// rank(union) < |colors| by brute-force rank.
bool IsRadoViolator(const std::vector<std::vector<int>>& sets, const Matroid& matroid,
                    const std::vector<int>& colors);

int BruteRank(const Matroid& matroid, const std::vector<int>& elements);

int BruteMaxMatching(const Graph& graph);

int BruteMaxRainbowMatching(const EdgeFamily& family);

// Smallest weight of a rainbow matching of the given size, if any.
std::optional<std::int64_t> BruteMinWeightRainbowMatching(
    const EdgeFamily& family, const std::vector<std::int64_t>& weights, int size);

bool BruteIsBipartite(const Graph& graph);

// Maximum number of vertex-disjoint S-T paths inside arcs.
int BrutePathPacking(const Network& network, const std::vector<int>& arcs);

// All simple paths from a source to a target using the given arcs.
std::vector<std::vector<int>> SimplePaths(const Network& network,
                                          const std::vector<int>& arcs);

// Whether the arcs of a path can be given distinct colors from classes that
// contain them.
bool Representable(const std::vector<int>& arcs,
                   const std::vector<std::vector<int>>& classes);

// Minimum weight of an s-t path that is rainbow for the classes.
std::optional<std::int64_t> BruteMinRainbowPath(const Network& network,
                                                const std::vector<std::int64_t>& weights,
                                                const std::vector<std::vector<int>>& classes);

// Whether some odd cycle of the graph is rainbow for the families.
bool BruteRainbowOddCycle(const Graph& graph,
                          const std::vector<std::vector<int>>& families);

int BruteMaxLatinTransversal(const LatinSquare& square);

// Whether every full choice function of the enforcer contains an s-t path.
bool BruteEnforces(const Network& network, const PathEnforcer& enforcer);

// Minimum number of independent sets covering the ground set.
int BruteCoveringNumber(const Matroid& matroid);

// Both sides of the counting identity for a linearish arc set: the number of
// S-T paths, and |Phi| - |V°| + (number of free paths).
std::pair<int, int> CountingSides(const Network& network, const std::vector<int>& arcs);

bool VerifyOddCycle(const Graph& graph, const std::vector<std::vector<int>>& families,
                    const std::vector<int>& edges, const std::vector<int>& colors);

bool BruteUnionBound(const PathEnforcer& enforcer, int n);

// Largest number of classes representable by distinct edges of `edges`.
int BruteRepresentation(const std::vector<int>& edges,
                        const std::vector<std::vector<int>>& classes);

}  // namespace rainbow::testing

#endif  // RAINBOW_TESTS_SUPPORT_ORACLES_H_
