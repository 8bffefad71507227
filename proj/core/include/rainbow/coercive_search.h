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

#ifndef RAINBOW_COERCIVE_SEARCH_H_
#define RAINBOW_COERCIVE_SEARCH_H_

#include <vector>

#include "rainbow/rainbow_matching.h"
#include "rainbow/rng.h"
#include "rainbow/sweep.h"

namespace rainbow {

// a copies of b with target c.
SizeSequence SequenceOf(const ArrowStatement& statement);

// Families of matchings with the sequence's sizes that have no rainbow
// matching of size sequence.target.
//
// kExhaustive: every multiset of matchings of the required sizes in the
//   complete (bipartite) graph on "vertices" vertices, with the first
//   matching fixed up to relabeling.
// kCycles: hosts that are disjoint unions of cycles and paths on at most
//   "vertices" vertices (bipartite class: even cycles only); "hosts=single"
//   restricts to one cycle. Every family of matchings inside each host.
// kRandom: per instance, each matching is a random perfect matching of
//   K_{h,h} (h = "side", default the largest size) cut down to its size.
SweepReport CounterexampleSearch(const SizeSequence& sequence, GraphClass graph_class,
                                 const SweepSpec& spec, const RecordSink& sink = {});

// Instance generator shared with the verification harness: matchings with
// the given sizes, drawn as in kRandom, on a bipartite graph with sides of
// size `side` (vertices 0..side-1 left). Edges are per-color copies.
EdgeFamily RandomBipartiteMatchings(const std::vector<int>& sizes, int side, Rng& rng);

}  // namespace rainbow

#endif  // RAINBOW_COERCIVE_SEARCH_H_
