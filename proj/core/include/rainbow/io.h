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

#ifndef RAINBOW_IO_H_
#define RAINBOW_IO_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/ground.h"
#include "rainbow/graph.h"
#include "rainbow/latin.h"
#include "rainbow/matroid.h"
#include "rainbow/network.h"
#include "rainbow/network_paths.h"
#include "rainbow/rainbow_matching.h"
#include "rainbow/span_cycles.h"

namespace rainbow {

// The JSON instance schema. Every field is optional; commands check for the
// ones they need.
struct Instance {
  std::optional<int> ground_size;
  std::optional<std::vector<std::vector<int>>> colors;
  std::optional<Graph> graph;
  std::optional<Network> network;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<LatinSquare> latin;
  std::optional<Matroid> matroid;
  std::optional<std::vector<std::vector<int>>> paths;
  std::optional<std::vector<std::vector<int>>> scrambling;
  std::optional<std::vector<std::vector<int>>> families;
  std::optional<std::vector<int>> target;
};

// Throws InputError with a JSON-pointer-like path ("/graph/edges/3/1: ...")
// for schema violations, and the offending invariant for structural ones.
Instance ParseInstance(std::string_view text);
Instance ParseInstance(const nlohmann::json& document);

// Matroid descriptors: {"kind": "partition", "parts", "caps"},
// {"kind": "uniform", "k"}, {"kind": "free"}, {"kind": "graphic", "graph"},
// {"kind": "binary", "matrix"}, {"kind": "truncation", "k", "base"},
// {"kind": "direct_sum", "first", "second"}. `ground_size` is used by the
// kinds that do not determine it.
Matroid ParseMatroid(const nlohmann::json& node, std::optional<int> ground_size,
                     const std::string& path = "/matroid");

nlohmann::json ToJson(const Graph& graph);
nlohmann::json ToJson(const Network& network);
nlohmann::json ToJson(const LatinSquare& square);
nlohmann::json ToJson(const Transversal& transversal);
nlohmann::json ToJson(const Matroid& matroid);
nlohmann::json ToJson(const Subset& subset);
nlohmann::json ToJson(const Cover& cover);
nlohmann::json ToJson(const ChoiceFunction& choice);
nlohmann::json ToJson(const Matching& matching);
nlohmann::json ToJson(const EdgeFamily& family);
nlohmann::json ToJson(const RainbowMatching& matching);
nlohmann::json ToJson(const RepeatsWitness& witness);
nlohmann::json ToJson(const RainbowPath& path);
nlohmann::json ToJson(const PathPacking& packing);
nlohmann::json ToJson(const RainbowCycle& cycle);
nlohmann::json ToJson(const TowerPair& towers);
nlohmann::json ToJson(const PathEnforcer& enforcer);

}  // namespace rainbow

#endif  // RAINBOW_IO_H_
