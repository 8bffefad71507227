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

#ifndef RAINBOW_RAINBOW_MATCHING_H_
#define RAINBOW_RAINBOW_MATCHING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/ground.h"
#include "rainbow/graph.h"

namespace rainbow {

// Color classes of edges in a graph. An edge id may belong to several
// classes.
class EdgeFamily {
 public:
  // Classes are sorted and deduplicated. Throws InputError on unknown ids.
  EdgeFamily(Graph graph, std::vector<std::vector<int>> colors);

  const Graph& graph() const { return graph_; }
  int num_colors() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& color(int i) const { return colors_.at(i); }
  const std::vector<std::vector<int>>& colors() const { return colors_; }

  // The same family viewed as sets over the edge-id ground set.
  ColoredFamily AsColoredFamily() const;

 private:
  Graph graph_;
  std::vector<std::vector<int>> colors_;
};

struct RainbowMatching {
  Matching matching;
  ChoiceFunction choice;  // color -> edge id

  int size() const { return matching.size(); }
};

// Maximum rainbow matching by branch and bound: branch on the remaining
// class with the fewest compatible edges (ties to the lower index), edges
// in id order, then on skipping the class; prune with the maximum matching
// of the remaining classes' compatible edges. Stops early once `target`
// edges are found. Graphs are limited to 64 vertices and 256 classes.
RainbowMatching MaxRainbowMatching(const EdgeFamily& family,
                                   std::optional<int> target = std::nullopt);

// A rainbow matching with exactly `size` edges whose total weight is at most
// `bound`, or nullopt. Weights are nonnegative and indexed by edge id.
std::optional<RainbowMatching> RainbowMatchingWithinWeight(
    const EdgeFamily& family, std::span<const std::int64_t> weights, int size,
    std::int64_t bound);

enum class GraphClass { kBipartite, kGeneral };

// (a, b) -> c: every a matchings of size b in the class have a rainbow
// matching of size c.
struct ArrowStatement {
  int a = 0;
  int b = 0;
  int c = 0;
  GraphClass graph_class = GraphClass::kBipartite;
};

// A nondecreasing sequence of matching sizes and the rainbow target n.
struct SizeSequence {
  std::vector<int> sizes;
  int target = 0;

  // Throws InputError if the sizes decrease or are negative.
  void Validate() const;
};

// (1, 2, ..., n-1, n, ..., n) with n repeated n times.
SizeSequence StairsSequence(int n);

// Checks the statement's hypothesis on `family` (a classes, each a matching
// of at least b edges, bipartite graph when required) and reports whether a
// rainbow matching of size c exists. Throws HypothesisError naming the
// failing class.
bool CheckArrowInstance(const ArrowStatement& statement, const EdgeFamily& family);

// Class i must be a matching with at least sizes[i] edges. Reports whether a
// rainbow matching of size `target` exists.
bool CheckSequenceInstance(const SizeSequence& sequence, const EdgeFamily& family);

// Rainbow matching of size k for 2k-1 nonempty edge sets in a bipartite graph
// with nu(F_i u F_j) >= k for all pairs. Throws HypothesisError naming the
// empty class or the deficient pair, and TheoremViolation if the exact
// search comes up short.
RainbowMatching CooperativeDriskoCheck(const EdgeFamily& family, int k);

struct ScrambledMatchingResult {
  RainbowMatching best;
  // |F| >= n^2 - n/2 matchings of size n in a bipartite graph, so a rainbow
  // matching of size n must exist.
  bool guaranteed = false;
};

// `original` holds the matchings F, `scrambled` an n-scrambling of them over
// the same graph. Searches for an S-rainbow matching of size n. Throws
// InputError for an invalid scrambling and TheoremViolation when a
// guaranteed instance fails.
ScrambledMatchingResult ScrambledMatchingCheck(const EdgeFamily& original,
                                               const EdgeFamily& scrambled, int n);

// A matching of size n inside the union of the classes, with an injective
// representation of at least k classes by its edges.
struct RepeatsWitness {
  Matching matching;
  ChoiceFunction representation;  // class -> edge id, injective
  bool constructive = false;      // produced by the k = 2 construction
};

enum class RepeatsMethod { kAuto, kExact, kConstructive };

// 2k-1 classes with k <= n. Classes k-1.. (zero-based) must be matchings
// of size n; the first k-1 classes must be matchings of size n as well,
// except that for k = 2 a single first class of size >= 1 is accepted. Throws
// HypothesisError on a bad class, and TheoremViolation if no witness exists.
// kConstructive returns nullopt when the k = 2 construction does not apply.
std::optional<RepeatsWitness> RepeatsMatching(const EdgeFamily& family, int k, int n,
                                              RepeatsMethod method = RepeatsMethod::kAuto);

// Largest number of classes injectively represented by edges of `matching`.
ChoiceFunction MaxRepresentation(const EdgeFamily& family,
                                 std::span<const int> matching);

}  // namespace rainbow

#endif  // RAINBOW_RAINBOW_MATCHING_H_
