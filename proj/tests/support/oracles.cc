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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace rainbow::testing {
namespace {

bool AssignDistinct(const std::vector<std::vector<int>>& options, std::size_t at,
                    std::vector<int>& chosen,
                    const std::function<bool(const std::vector<int>&)>& accept) {
  if (at == options.size()) return true;
  for (int x : options[at]) {
    if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
    chosen.push_back(x);
    if (accept(chosen) && AssignDistinct(options, at + 1, chosen, accept)) return true;
    chosen.pop_back();
  }
  return false;
}

std::vector<int> UnionOf(const std::vector<std::vector<int>>& sets,
                         const std::vector<int>& colors) {
  std::set<int> all;
  for (int c : colors) all.insert(sets[c].begin(), sets[c].end());
  return {all.begin(), all.end()};
}

bool Reaches(const Network& network, const std::vector<int>& arcs) {
  std::vector<char> seen(network.num_vertices(), 0);
  std::vector<int> stack(network.sources().begin(), network.sources().end());
  for (int s : stack) seen[s] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (network.IsTarget(v)) return true;
    for (int a : arcs) {
      const Arc& arc = network.arc(a);
      if (arc.tail == v && !seen[arc.head]) {
        seen[arc.head] = 1;
        stack.push_back(arc.head);
      }
    }
  }
  return false;
}

}  // namespace

bool BruteFullRainbow(const std::vector<std::vector<int>>& sets) {
  std::vector<int> chosen;
  return AssignDistinct(sets, 0, chosen, [](const std::vector<int>&) { return true; });
}

bool BruteIndependentRainbow(const std::vector<std::vector<int>>& sets,
                             const Matroid& matroid) {
  std::vector<int> chosen;
  return AssignDistinct(sets, 0, chosen, [&](const std::vector<int>& image) {
    Subset set;
    for (int x : image) set.Insert(x);
    return matroid.IsIndependent(set);
  });
}

bool IsHallViolator(const std::vector<std::vector<int>>& sets,
                    const std::vector<int>& colors) {
  return !colors.empty() && UnionOf(sets, colors).size() < colors.size();
}

int BruteRank(const Matroid& matroid, const std::vector<int>& elements) {
  const int m = static_cast<int>(elements.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    Subset set;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) set.Insert(elements[i]);
    }
    if (matroid.IsIndependent(set)) best = size;
  }
  return best;
}

bool IsRadoViolator(const std::vector<std::vector<int>>& sets, const Matroid& matroid,
                    const std::vector<int>& colors) {
  return !colors.empty() &&
         BruteRank(matroid, UnionOf(sets, colors)) < static_cast<int>(colors.size());
}

int BruteMaxMatching(const Graph& graph) {
  const int m = graph.num_edges();
  int best = 0;
  std::function<void(int, std::vector<char>&, int)> go = [&](int at,
                                                             std::vector<char>& used,
                                                             int size) {
    best = std::max(best, size);
    if (at == m || size + (m - at) <= best) return;
    const Edge& e = graph.edge(at);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      go(at + 1, used, size + 1);
      used[e.u] = used[e.v] = 0;
    }
    go(at + 1, used, size);
  };
  std::vector<char> used(graph.num_vertices(), 0);
  go(0, used, 0);
  return best;
}

namespace {

void RainbowMatchingSearch(
    const EdgeFamily& family, int color, std::vector<char>& used, int size,
    std::int64_t weight, const std::vector<std::int64_t>* weights,
    const std::function<void(int, std::int64_t)>& visit) {
  visit(size, weight);
  if (color == family.num_colors()) return;
  for (int id : family.color(color)) {
    const Edge& e = family.graph().edge(id);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    RainbowMatchingSearch(family, color + 1, used, size + 1,
                          weight + (weights ? (*weights)[id] : 0), weights, visit);
    used[e.u] = used[e.v] = 0;
  }
  RainbowMatchingSearch(family, color + 1, used, size, weight, weights, visit);
}

}  // namespace

int BruteMaxRainbowMatching(const EdgeFamily& family) {
  int best = 0;
  std::vector<char> used(family.graph().num_vertices(), 0);
  RainbowMatchingSearch(family, 0, used, 0, 0, nullptr,
                        [&](int size, std::int64_t) { best = std::max(best, size); });
  return best;
}

std::optional<std::int64_t> BruteMinWeightRainbowMatching(
    const EdgeFamily& family, const std::vector<std::int64_t>& weights, int size) {
  std::optional<std::int64_t> best;
  std::vector<char> used(family.graph().num_vertices(), 0);
  RainbowMatchingSearch(family, 0, used, 0, 0, &weights,
                        [&](int s, std::int64_t w) {
                          if (s == size && (!best || w < *best)) best = w;
                        });
  return best;
}

bool BruteIsBipartite(const Graph& graph) {
  const int n = graph.num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool proper = true;
    for (const Edge& e : graph.edges()) {
      if (((mask >> e.u) & 1) == ((mask >> e.v) & 1)) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
  }
  return false;
}

std::vector<std::vector<int>> SimplePaths(const Network& network,
                                          const std::vector<int>& arcs) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on_path(network.num_vertices(), 0);
  std::function<void(int)> extend = [&](int v) {
    if (network.IsTarget(v)) {
      out.push_back(path);
      return;
    }
    for (int a : arcs) {
      const Arc& arc = network.arc(a);
      if (arc.tail != v || on_path[arc.head]) continue;
      on_path[arc.head] = 1;
      path.push_back(a);
      extend(arc.head);
      path.pop_back();
      on_path[arc.head] = 0;
    }
  };
  for (int s : network.sources()) {
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  return out;
}

int BrutePathPacking(const Network& network, const std::vector<int>& arcs) {
  const auto paths = SimplePaths(network, arcs);
  std::vector<std::vector<int>> vertices;
  for (const auto& path : paths) {
    std::vector<int> vs{network.arc(path.front()).tail};
    for (int a : path) vs.push_back(network.arc(a).head);
    vertices.push_back(vs);
  }
  int best = 0;
  std::vector<char> used(network.num_vertices(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t at, int size) {
    best = std::max(best, size);
    for (std::size_t i = at; i < vertices.size(); ++i) {
      bool free = true;
      for (int v : vertices[i]) free = free && !used[v];
      if (!free) continue;
      for (int v : vertices[i]) used[v] = 1;
      go(i + 1, size + 1);
      for (int v : vertices[i]) used[v] = 0;
    }
  };
  go(0, 0);
  return best;
}

bool Representable(const std::vector<int>& arcs,
                   const std::vector<std::vector<int>>& classes) {
  std::vector<std::vector<int>> options(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (std::find(classes[c].begin(), classes[c].end(), arcs[i]) != classes[c].end()) {
        options[i].push_back(static_cast<int>(c));
      }
    }
  }
  std::vector<int> chosen;
  return AssignDistinct(options, 0, chosen, [](const std::vector<int>&) { return true; });
}

std::optional<std::int64_t> BruteMinRainbowPath(const Network& network,
                                                const std::vector<std::int64_t>& weights,
                                                const std::vector<std::vector<int>>& classes) {
  std::set<int> pool;
  for (const auto& c : classes) pool.insert(c.begin(), c.end());
  std::optional<std::int64_t> best;
  for (const auto& path : SimplePaths(network, {pool.begin(), pool.end()})) {
    if (!Representable(path, classes)) continue;
    std::int64_t w = 0;
    for (int a : path) w += weights[a];
    if (!best || w < *best) best = w;
  }
  return best;
}

bool BruteRainbowOddCycle(const Graph& graph,
                          const std::vector<std::vector<int>>& families) {
  const int limit = std::min<int>(static_cast<int>(families.size()), graph.num_vertices());
  std::vector<int> path;
  std::vector<char> on_path(graph.num_vertices(), 0);
  std::function<bool(int, int)> extend = [&](int start, int v) {
    for (int id = 0; id < graph.num_edges(); ++id) {
      const Edge& e = graph.edge(id);
      if (!e.Touches(v)) continue;
      if (std::find(path.begin(), path.end(), id) != path.end()) continue;
      const int w = e.Other(v);
      if (w == start) {
        path.push_back(id);
        const bool hit = path.size() % 2 == 1 && Representable(path, families);
        path.pop_back();
        if (hit) return true;
        continue;
      }
      if (on_path[w] || w < start || static_cast<int>(path.size()) + 1 >= limit) continue;
      on_path[w] = 1;
      path.push_back(id);
      const bool hit = extend(start, w);
      path.pop_back();
      on_path[w] = 0;
      if (hit) return true;
    }
    return false;
  };
  for (int s = 0; s < graph.num_vertices(); ++s) {
    on_path[s] = 1;
    const bool hit = extend(s, s);
    on_path[s] = 0;
    if (hit) return true;
  }
  return false;
}

int BruteMaxLatinTransversal(const LatinSquare& square) {
  const int n = square.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 0;
  do {
    std::set<int> symbols;
    for (int r = 0; r < n; ++r) symbols.insert(square.At(r, perm[r]));
    best = std::max(best, static_cast<int>(symbols.size()));
  } while (best < n && std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool BruteEnforces(const Network& network, const PathEnforcer& enforcer) {
  std::vector<int> chosen;
  std::function<bool(std::size_t)> all = [&](std::size_t at) {
    if (at == enforcer.size()) return Reaches(network, chosen);
    for (const Occurrence& o : enforcer[at]) {
      chosen.push_back(o.arc);
      const bool ok = all(at + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return all(0);
}

int BruteCoveringNumber(const Matroid& matroid) {
  const int n = matroid.ground_size();
  for (int k = 1; k <= n; ++k) {
    std::vector<Subset> parts(k);
    std::function<bool(int, int)> place = [&](int x, int opened) {
      if (x == n) return true;
      for (int p = 0; p < std::min(k, opened + 1); ++p) {
        parts[p].Insert(x);
        if (matroid.IsIndependent(parts[p]) && place(x + 1, std::max(opened, p + 1))) {
          return true;
        }
        parts[p].Erase(x);
      }
      return false;
    };
    if (place(0, 0)) return k;
  }
  return n == 0 ? 0 : std::numeric_limits<int>::max();
}

std::pair<int, int> CountingSides(const Network& network, const std::vector<int>& arcs) {
  std::vector<int> succ(network.num_vertices(), -1), pred(network.num_vertices(), -1);
  std::set<int> touched;
  for (int a : arcs) {
    succ[network.arc(a).tail] = network.arc(a).head;
    pred[network.arc(a).head] = network.arc(a).tail;
    touched.insert(network.arc(a).tail);
    touched.insert(network.arc(a).head);
  }
  int st = 0;
  int free = 0;
  for (int v : touched) {
    if (pred[v] != -1) continue;
    int end = v;
    while (succ[end] != -1) end = succ[end];
    const bool s = network.IsSource(v);
    const bool t = network.IsTarget(end);
    st += s && t;
    free += !s && !t;
  }
  int untouched = 0;
  for (int x : network.inner_vertices()) untouched += touched.count(x) == 0;
  const int phi = static_cast<int>(arcs.size()) + untouched;
  return {st, phi - network.num_inner() + free};
}

bool VerifyOddCycle(const Graph& graph, const std::vector<std::vector<int>>& families,
                    const std::vector<int>& edges, const std::vector<int>& colors) {
  const std::size_t len = edges.size();
  if (len < 3 || len % 2 == 0 || colors.size() != len) return false;
  if (std::set<int>(edges.begin(), edges.end()).size() != len) return false;
  if (std::set<int>(colors.begin(), colors.end()).size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!graph.HasEdge(edges[i])) return false;
    if (colors[i] < 0 || colors[i] >= static_cast<int>(families.size())) return false;
    const auto& f = families[colors[i]];
    if (std::find(f.begin(), f.end(), edges[i]) == f.end()) return false;
  }
  // Walk the edges in order; consecutive edges must share the walk vertex.
  const Edge& first = graph.edge(edges[0]);
  for (int start : {first.u, first.v}) {
    int at = first.Other(start);
    std::set<int> seen{start};
    bool ok = true;
    for (std::size_t i = 1; i < len && ok; ++i) {
      const Edge& e = graph.edge(edges[i]);
      if (!e.Touches(at) || seen.count(at)) {
        ok = false;
        break;
      }
      seen.insert(at);
      at = e.Other(at);
    }
    if (ok && at == start) return true;
  }
  return false;
}

bool BruteUnionBound(const PathEnforcer& enforcer, int n) {
  const std::size_t m = enforcer.size();
  std::vector<std::pair<int, int>> pool;
  std::function<bool(std::size_t, int)> go = [&](std::size_t at, int members) {
    if (at == m) {
      if (members == 0) return true;
      std::vector<std::pair<int, int>> distinct = pool;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      return static_cast<long long>(distinct.size()) >=
             static_cast<long long>(n) * (members - 1) + 1;
    }
    if (!go(at + 1, members)) return false;
    const std::size_t mark = pool.size();
    for (const Occurrence& o : enforcer[at]) pool.emplace_back(o.color, o.arc);
    const bool ok = go(at + 1, members + 1);
    pool.resize(mark);
    return ok;
  };
  return go(0, 0);
}

int BruteRepresentation(const std::vector<int>& edges,
                        const std::vector<std::vector<int>>& classes) {
  int best = 0;
  std::vector<char> used(edges.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t c, int count) {
    if (count + static_cast<int>(classes.size() - c) <= best) return;
    if (c == classes.size()) {
      best = count;
      return;
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used[i]) continue;
      if (std::find(classes[c].begin(), classes[c].end(), edges[i]) == classes[c].end()) {
        continue;
      }
      used[i] = 1;
      go(c + 1, count + 1);
      used[i] = 0;
    }
    go(c + 1, count);
  };
  go(0, 0);
  return best;
}

}  // namespace rainbow::testing
