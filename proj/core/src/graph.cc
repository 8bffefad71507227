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

#include "rainbow/graph.h"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <string>
#include <unordered_map>

#include "rainbow/errors.h"

namespace rainbow {
namespace {

constexpr std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

// Maximum matching on at most 64 vertices by memoized search over the set
// of still-available vertices. The lowest available vertex is either matched
// to one of its available neighbours or left exposed.
class ExactMatcher {
 public:
  explicit ExactMatcher(const std::array<std::uint64_t, 64>& adj) : adj_(adj) {}

  int Solve(std::uint64_t alive) {
    const std::uint64_t active = Active(alive);
    if (active == 0) return 0;
    if (auto it = memo_.find(active); it != memo_.end()) return it->second;
    const int v = std::countr_zero(active);
    const std::uint64_t rest = active & ~Bit(v);
    const int cap = std::popcount(active) / 2;
    int best = 0;
    for (std::uint64_t nb = adj_[v] & rest; nb != 0 && best < cap;
         nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      best = std::max(best, 1 + Solve(rest & ~Bit(u)));
    }
    if (best < cap) best = std::max(best, Solve(rest));
    memo_.emplace(active, best);
    return best;
  }

  // Vertex pairs of one optimal matching.
  std::vector<std::pair<int, int>> Reconstruct(std::uint64_t alive) {
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t state = Active(alive);
    while (state != 0) {
      const int target = Solve(state);
      if (target == 0) break;
      const int v = std::countr_zero(state);
      const std::uint64_t rest = state & ~Bit(v);
      bool matched = false;
      for (std::uint64_t nb = adj_[v] & rest; nb != 0; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        if (1 + Solve(rest & ~Bit(u)) == target) {
          pairs.emplace_back(v, u);
          state = Active(rest & ~Bit(u));
          matched = true;
          break;
        }
      }
      if (!matched) state = Active(rest);
    }
    return pairs;
  }

 private:
  std::uint64_t Active(std::uint64_t alive) const {
    std::uint64_t active = 0;
    for (std::uint64_t m = alive; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (adj_[v] & alive) active |= Bit(v);
    }
    return active;
  }

  const std::array<std::uint64_t, 64>& adj_;
  std::unordered_map<std::uint64_t, int> memo_;
};

// Kuhn's augmenting-path algorithm over adjacency lists of (vertex, edge id).
class BipartiteMatcher {
 public:
  BipartiteMatcher(int n, const std::vector<int>& side)
      : adj_(n), match_edge_(n, -1), side_(side) {}

  void AddEdge(int a, int b, int id) {
    if (side_[a] == 0) {
      adj_[a].push_back({b, id});
    } else {
      adj_[b].push_back({a, id});
    }
  }

  std::vector<int> Run(const std::vector<Edge>& edges) {
    edges_ = &edges;
    const int n = static_cast<int>(adj_.size());
    for (int u = 0; u < n; ++u) {
      if (side_[u] != 0 || adj_[u].empty()) continue;
      visited_.assign(n, 0);
      Augment(u);
    }
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
      if (side_[v] == 1 && match_edge_[v] >= 0) result.push_back(match_edge_[v]);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

 private:
  bool Augment(int u) {
    for (const auto& [r, id] : adj_[u]) {
      if (visited_[r]) continue;
      visited_[r] = 1;
      const int current = match_edge_[r];
      if (current < 0 || Augment((*edges_)[current].Other(r))) {
        match_edge_[r] = id;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> match_edge_;  // right vertex -> matched edge id
  std::vector<char> visited_;
  const std::vector<int>& side_;
  const std::vector<Edge>* edges_ = nullptr;
};

std::optional<std::vector<int>> TwoColor(int n, const std::vector<Edge>& edges,
                                         std::span<const int> ids) {
  std::vector<std::vector<int>> adj(n);
  for (int id : ids) {
    adj[edges[id].u].push_back(edges[id].v);
    adj[edges[id].v].push_back(edges[id].u);
  }
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) throw InputError("vertex count must be nonnegative");
  for (size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices) {
      throw InputError("edge " + std::to_string(id) +
                       " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw InputError("edge " + std::to_string(id) + " is a self-loop");
    }
  }
}

Graph::Graph(int num_vertices, std::vector<Edge> edges, std::vector<int> sides)
    : Graph(num_vertices, std::move(edges)) {
  if (static_cast<int>(sides.size()) != num_vertices) {
    throw InputError("bipartition must assign a side to every vertex");
  }
  for (int s : sides) {
    if (s != 0 && s != 1) throw InputError("bipartition sides must be 0 or 1");
  }
  for (size_t id = 0; id < edges_.size(); ++id) {
    if (sides[edges_[id].u] == sides[edges_[id].v]) {
      throw InputError("edge " + std::to_string(id) +
                       " does not cross the bipartition");
    }
  }
  bipartition_ = std::move(sides);
}

std::optional<std::vector<int>> Graph::TwoColoring() const {
  if (bipartition_) return bipartition_;
  std::vector<int> all(edges_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return TwoColor(num_vertices_, edges_, all);
}

bool IsMatching(const Graph& graph, std::span<const int> edge_ids) {
  std::vector<char> used(graph.num_vertices(), 0);
  for (int id : edge_ids) {
    if (!graph.HasEdge(id)) {
      throw InputError("unknown edge id " + std::to_string(id));
    }
  }
  for (int id : edge_ids) {
    const Edge& e = graph.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

Matching MaxMatching(const Graph& graph) {
  std::vector<int> all(graph.num_edges());
  for (int i = 0; i < graph.num_edges(); ++i) all[i] = i;
  return MaxMatching(graph, all);
}

Matching MaxMatching(const Graph& graph, std::span<const int> edge_ids) {
  for (int id : edge_ids) {
    if (!graph.HasEdge(id)) {
      throw InputError("unknown edge id " + std::to_string(id));
    }
  }
  const int n = graph.num_vertices();
  std::optional<std::vector<int>> sides = graph.bipartition();
  if (!sides) sides = TwoColor(n, graph.edges(), edge_ids);
  if (sides) {
    BipartiteMatcher matcher(n, *sides);
    for (int id : edge_ids) {
      matcher.AddEdge(graph.edge(id).u, graph.edge(id).v, id);
    }
    return Matching{matcher.Run(graph.edges())};
  }

  if (n > 64) {
    throw InputError("exact matching on non-bipartite graphs is limited to 64 vertices");
  }
  std::array<std::uint64_t, 64> adj{};
  std::uint64_t alive = 0;
  for (int id : edge_ids) {
    const Edge& e = graph.edge(id);
    adj[e.u] |= Bit(e.v);
    adj[e.v] |= Bit(e.u);
    alive |= Bit(e.u) | Bit(e.v);
  }
  ExactMatcher matcher(adj);
  std::vector<int> result;
  for (const auto& [a, b] : matcher.Reconstruct(alive)) {
    int chosen = -1;
    for (int id : edge_ids) {
      const Edge& e = graph.edge(id);
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
        if (chosen < 0 || id < chosen) chosen = id;
      }
    }
    result.push_back(chosen);
  }
  std::sort(result.begin(), result.end());
  return Matching{result};
}

namespace internal {

int MatchingSize(std::span<const Edge> edges, std::optional<std::uint64_t> left) {
  std::array<std::uint64_t, 64> adj{};
  std::uint64_t alive = 0;
  if (left) {
    for (const Edge& e : edges) {
      const bool u_left = (*left >> e.u) & 1;
      const int l = u_left ? e.u : e.v;
      const int r = u_left ? e.v : e.u;
      adj[l] |= Bit(r);
      alive |= Bit(l);
    }
    std::array<int, 64> match;
    match.fill(-1);
    std::uint64_t visited = 0;
    // Recursive lambda for Kuhn's augmenting step.
    auto augment = [&](auto&& self, int u) -> bool {
      for (std::uint64_t nb = adj[u] & ~visited; nb != 0; nb &= nb - 1) {
        const int r = std::countr_zero(nb);
        if (visited & Bit(r)) continue;
        visited |= Bit(r);
        if (match[r] < 0 || self(self, match[r])) {
          match[r] = u;
          return true;
        }
      }
      return false;
    };
    int size = 0;
    for (std::uint64_t m = alive; m != 0; m &= m - 1) {
      visited = 0;
      if (augment(augment, std::countr_zero(m))) ++size;
    }
    return size;
  }
  for (const Edge& e : edges) {
    adj[e.u] |= Bit(e.v);
    adj[e.v] |= Bit(e.u);
    alive |= Bit(e.u) | Bit(e.v);
  }
  ExactMatcher matcher(adj);
  return matcher.Solve(alive);
}

}  // namespace internal
}  // namespace rainbow
