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

#ifndef RAINBOW_NETWORK_PATHS_H_
#define RAINBOW_NETWORK_PATHS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/ground.h"
#include "rainbow/graph.h"
#include "rainbow/network.h"

namespace rainbow {

// A set of arcs in which every vertex has in- and out-degree at most one.
class LinearishArborescence {
 public:
  // Throws InputError on an unknown arc or a degree violation.
  LinearishArborescence(const Network& network, std::vector<int> arcs);

  const std::vector<int>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }

 private:
  std::vector<int> arcs_;
};

// Components as arc sequences in traversal order. Paths start at their
// in-degree-zero vertex; cycles start at their smallest arc id.
struct ComponentClassification {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> from_sources;  // start in S
  std::vector<std::vector<int>> to_targets;    // end in T
  std::vector<std::vector<int>> source_target; // both
  std::vector<std::vector<int>> free_paths;    // neither
};

ComponentClassification Classify(const Network& network,
                                 const LinearishArborescence& forest);

// The bipartite double of a network. Sending copies v' exist for v in S and
// the inner vertices, absorbing copies v'' for v in T and the inner
// vertices. Edge a < num_arcs is the copy u'v'' of arc a; edge num_arcs + i
// is the loop edge x'x'' of the i-th inner vertex.
class BipartifiedNetwork {
 public:
  explicit BipartifiedNetwork(const Network& network);

  const Graph& graph() const { return graph_; }
  int num_arcs() const { return num_arcs_; }
  bool IsLoopEdge(int edge) const { return edge >= num_arcs_; }
  // Loop edge of an inner vertex.
  int LoopEdge(int inner_vertex) const;
  // All loop edges, ascending.
  std::vector<int> LoopEdges() const;
  int sending(int v) const { return sending_.at(v); }
  int absorbing(int v) const { return absorbing_.at(v); }

 private:
  Graph graph_;
  int num_arcs_ = 0;
  std::vector<int> inner_;
  std::vector<int> inner_index_;
  std::vector<int> sending_;
  std::vector<int> absorbing_;
};

// The arcs of the forest plus the loop edges of inner vertices it misses.
Matching Phi(const Network& network, const BipartifiedNetwork& doubled,
             const LinearishArborescence& forest);
// Non-loop edges of a matching, as arc ids.
LinearishArborescence Psi(const Network& network, const BipartifiedNetwork& doubled,
                          const Matching& matching);

// |L_ST| == |Phi(L)| - |inner| + |free paths|.
bool CheckCountingClaim(const Network& network, const LinearishArborescence& forest);

struct PathPacking {
  int size = 0;
  std::vector<std::vector<int>> paths;  // arc sequences, S to T
};

// Maximum number of vertex-disjoint S-T paths using only `arcs`, by unit
// vertex-capacity max flow.
PathPacking NuP(const Network& network, std::span<const int> arcs);

struct DisjointPathsResult {
  std::vector<int> arcs;     // R, ascending
  ChoiceFunction choice;     // color -> arc
  PathPacking packing;       // inside R, size >= p
};

// colors.size() must be 2p - 1 + |inner|, each with NuP >= p; throws
// HypothesisError naming the first deficient color. TheoremViolation if the
// final packing is short.
DisjointPathsResult RainbowDisjointPaths(const Network& network,
                                         const std::vector<std::vector<int>>& colors,
                                         int p);

struct RainbowPath {
  std::vector<int> arcs;    // s to t, in order
  std::vector<int> colors;  // colors[i] provides arcs[i]
  std::int64_t weight = 0;
};

struct WeightedPathOptions {
  // Assert w(T u) <= w(P u) for every unrepresented path P through every
  // tree vertex u after each step.
  bool check_tree_invariant = false;
};

// Grows a shortest-path-like tree from s using at each step only arcs of
// paths not yet represented. Requires a single source and target, at least
// |inner| + 1 paths, each an s-t path of weight at most `bound`.
RainbowPath RainbowPathWeighted(const Network& network, const WeightMap& weights,
                                const std::vector<std::vector<int>>& paths,
                                std::int64_t bound,
                                const WeightedPathOptions& options = {});

// An arc occurrence: arc `arc` as a member of scrambled class `color`.
struct Occurrence {
  int color = 0;
  int arc = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

struct Tower {
  std::vector<int> order;                        // order[0] is s (or t)
  std::vector<std::vector<Occurrence>> incident; // incident[i] for i > 0
};

struct TowerPair {
  Tower source;
  Tower target;
};

// Maximal vertex-disjoint n-fold source and target towers over the
// occurrence multigraph, grown greedily: source before target, smallest
// vertex first.
TowerPair BuildTowers(const Network& network,
                      const std::vector<std::vector<int>>& classes, int n);

using PathEnforcer = std::vector<std::vector<Occurrence>>;

// |union K'| >= n(|K'| - 1) + 1 for every nonempty subfamily. Throws
// CapExceeded above 24 members.
bool SatisfiesUnionBound(const PathEnforcer& enforcer, int n);
// Every full choice function contains an s-t path. nullopt when the
// product of member sizes exceeds `cap`.
std::optional<bool> EnforcesPath(const Network& network, const PathEnforcer& enforcer,
                                 std::int64_t cap = 100000);

struct ScrambledPathResult {
  RainbowPath path;
  TowerPair towers;
  PathEnforcer enforcer;
  std::optional<int> bridge_vertex;  // w, when used
  bool union_bound = false;
  std::optional<bool> enforces_path;
};

// `paths` are s-t paths (arc lists), `scrambled` an n-scrambling of them.
// Requires 2|paths| > n |inner|.
ScrambledPathResult ScrambledRainbowPath(const Network& network,
                                         const std::vector<std::vector<int>>& paths,
                                         const std::vector<std::vector<int>>& scrambled,
                                         int n);

}  // namespace rainbow

#endif  // RAINBOW_NETWORK_PATHS_H_
