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

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "rainbow/errors.h"
#include "rainbow/network_paths.h"

namespace rainbow {

RainbowPath RainbowPathWeighted(const Network& network, const WeightMap& weights,
                                const std::vector<std::vector<int>>& paths,
                                std::int64_t bound,
                                const WeightedPathOptions& options) {
  const int s = network.SingleSource();
  const int t = network.SingleTarget();
  if (weights.size() != network.num_arcs()) {
    throw InputError("weights must be parallel to the arc list");
  }
  const int m = static_cast<int>(paths.size());
  if (m < network.num_inner() + 1) {
    throw HypothesisError("need at least " + std::to_string(network.num_inner() + 1) +
                              " paths, got " + std::to_string(m),
                          {});
  }
  std::vector<std::vector<int>> sorted(m);
  for (int i = 0; i < m; ++i) {
    try {
      ValidatePath(network, paths[i], s, t);
    } catch (const InputError& e) {
      throw HypothesisError("path " + std::to_string(i) + ": " + e.what(), {i});
    }
    if (weights.Total(paths[i]) > bound) {
      throw HypothesisError("path " + std::to_string(i) + " has weight " +
                                std::to_string(weights.Total(paths[i])) +
                                " above the bound " + std::to_string(bound),
                            {i});
    }
    sorted[i] = paths[i];
    std::sort(sorted[i].begin(), sorted[i].end());
  }

  const int n = network.num_vertices();
  constexpr std::int64_t kUnreached = -1;
  std::vector<std::int64_t> dist(n, kUnreached);
  std::vector<int> parent_arc(n, -1);
  std::vector<int> parent_color(n, -1);
  std::vector<bool> represented(m, false);
  dist[s] = 0;

  auto check_invariant = [&] {
    for (int i = 0; i < m; ++i) {
      if (represented[i]) continue;
      std::int64_t prefix = 0;
      int v = s;
      for (int a : paths[i]) {
        if (dist[v] != kUnreached && dist[v] > prefix) {
          throw TheoremViolation("tree distance to " + std::to_string(v) +
                                 " exceeds the prefix weight of path " +
                                 std::to_string(i));
        }
        prefix += weights[a];
        v = network.arc(a).head;
      }
      if (dist[v] != kUnreached && dist[v] > prefix) {
        throw TheoremViolation("tree distance to " + std::to_string(v) +
                               " exceeds the prefix weight of path " +
                               std::to_string(i));
      }
    }
  };
  if (options.check_tree_invariant) check_invariant();

  while (dist[t] == kUnreached) {
    std::tuple<std::int64_t, int, int> best{std::numeric_limits<std::int64_t>::max(),
                                            n, network.num_arcs()};
    int best_color = -1;
    for (int a = 0; a < network.num_arcs(); ++a) {
      const Arc& arc = network.arc(a);
      if (dist[arc.tail] == kUnreached || dist[arc.head] != kUnreached) continue;
      int color = -1;
      for (int i = 0; i < m && color < 0; ++i) {
        if (!represented[i] && std::binary_search(sorted[i].begin(), sorted[i].end(), a)) {
          color = i;
        }
      }
      if (color < 0) continue;
      const std::tuple<std::int64_t, int, int> key{dist[arc.tail] + weights[a],
                                                   arc.tail, a};
      if (key < best) {
        best = key;
        best_color = color;
      }
    }
    if (best_color < 0) {
      throw TheoremViolation("no unrepresented path leaves the tree");
    }
    const auto [d, tail, a] = best;
    const int head = network.arc(a).head;
    dist[head] = d;
    parent_arc[head] = a;
    parent_color[head] = best_color;
    represented[best_color] = true;
    if (options.check_tree_invariant) check_invariant();
  }

  RainbowPath result;
  for (int v = t; v != s; v = network.arc(parent_arc[v]).tail) {
    result.arcs.push_back(parent_arc[v]);
    result.colors.push_back(parent_color[v]);
  }
  std::reverse(result.arcs.begin(), result.arcs.end());
  std::reverse(result.colors.begin(), result.colors.end());
  result.weight = dist[t];
  if (result.weight > bound) {
    throw TheoremViolation("rainbow path weight " + std::to_string(result.weight) +
                           " exceeds the bound " + std::to_string(bound));
  }
  return result;
}

}  // namespace rainbow
