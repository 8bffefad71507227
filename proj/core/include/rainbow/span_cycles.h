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

#ifndef RAINBOW_SPAN_CYCLES_H_
#define RAINBOW_SPAN_CYCLES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/ground.h"
#include "rainbow/graph.h"
#include "rainbow/matroid.h"
#include "rainbow/subset.h"

namespace rainbow {

struct SpanningOptions {
  // Check the cooperative hypothesis over every color set J up to this many
  // colors, and over a fixed pseudo-random sample of 4096 sets beyond it.
  bool validate = true;
  int exhaustive_limit = 12;
};

struct SpanningResult {
  ChoiceFunction choice;
  // The minimal rank-deficient color set used, if any.
  std::optional<std::vector<int>> deficient;
};

// A rainbow set of the sets spanning every element of `target`. The matroid
// must have rank sets.size(). For every color set J, either
// rank(A_J) >= |J| or target lies in span(A_J); a failure names J in the
// HypothesisError.
SpanningResult RainbowSpanningSet(const Matroid& matroid, const Subset& target,
                                  const std::vector<std::vector<int>>& sets,
                                  const SpanningOptions& options = {});

// (chi_e, 1) per edge: endpoint bits plus bit n. At most 63 vertices.
std::vector<std::uint64_t> AugmentedEdgeVectors(const Graph& graph);
// The vector (0, ..., 0, 1).
std::uint64_t ParityVector(int num_vertices);

bool IsBipartiteViaSpan(const Graph& graph);

struct RainbowCycle {
  std::vector<int> edges;   // in cyclic order
  std::vector<int> colors;  // colors[i] provides edges[i]
};

// `families` holds n edge-id sets over `graph`, where n is the vertex count,
// each containing an odd cycle. Throws HypothesisError on a wrong count or a
// bipartite set, TheoremViolation if extraction fails.
RainbowCycle RainbowOddCycle(const Graph& graph,
                             const std::vector<std::vector<int>>& families);

// Cooperative form: for each color set J, the components of F_J satisfy
// sum(|V(C)| - 1) >= |J|, or F_J has an odd cycle. Throws HypothesisError
// naming the first failing J (exhaustive up to 20 colors).
RainbowCycle CooperativeOddCycle(const Graph& graph,
                                 const std::vector<std::vector<int>>& families);

// Whether `cycle` is an odd cycle of `graph` drawing edge i from
// families[colors[i]] with distinct colors.
bool IsRainbowOddCycle(const Graph& graph, const std::vector<std::vector<int>>& families,
                       const RainbowCycle& cycle);

}  // namespace rainbow

#endif  // RAINBOW_SPAN_CYCLES_H_
