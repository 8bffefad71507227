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

#ifndef RAINBOW_GRAPH_H_
#define RAINBOW_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

// Undirected edge. Edges are identified by their index in the owning graph,
// never by their endpoints: parallel edges are distinct.
struct Edge {
  int u = 0;
  int v = 0;

  bool Touches(int x) const { return u == x || v == x; }
  int Other(int x) const { return x == u ? v : u; }
};

class Graph {
 public:
  Graph() = default;
  // Throws InputError on out-of-range endpoints or self-loops.
  Graph(int num_vertices, std::vector<Edge> edges);
  // As above, with a fixed bipartition: sides[v] is 0 or 1 and every edge
  // must join the two sides.
  Graph(int num_vertices, std::vector<Edge> edges, std::vector<int> sides);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_.at(id); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<int>>& bipartition() const {
    return bipartition_;
  }

  // Declared bipartition if present, otherwise a BFS 2-coloring; nullopt
  // when the graph has an odd cycle.
  std::optional<std::vector<int>> TwoColoring() const;
  bool IsBipartite() const { return TwoColoring().has_value(); }

  bool HasEdge(int id) const { return id >= 0 && id < num_edges(); }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<int>> bipartition_;
};

struct Matching {
  std::vector<int> edges;  // edge ids, ascending

  int size() const { return static_cast<int>(edges.size()); }
};

// True iff the edges are pairwise vertex-disjoint. Throws InputError on an
// unknown edge id.
bool IsMatching(const Graph& graph, std::span<const int> edge_ids);

// Maximum-cardinality matching. Bipartite graphs use augmenting paths; other
// graphs use an exact memoized search over vertex subsets (at most 64
// vertices).
Matching MaxMatching(const Graph& graph);
// Same, restricted to the edges listed in `edge_ids`.
Matching MaxMatching(const Graph& graph, std::span<const int> edge_ids);

namespace internal {

// Size of a maximum matching among `edges`, whose endpoints are all < 64.
// `left` is the mask of one side when the edge set is known to be bipartite
// with respect to it; pass std::nullopt for a general graph.
int MatchingSize(std::span<const Edge> edges, std::optional<std::uint64_t> left);

}  // namespace internal

}  // namespace rainbow

#endif  // RAINBOW_GRAPH_H_
