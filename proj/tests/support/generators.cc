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

#include "generators.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace rainbow::testing {
namespace {

class ArcBuilder {
 public:
  // Reuses an existing arc between tail and head unless a parallel copy is
  // requested.
  int Get(int tail, int head, bool parallel) {
    auto& ids = by_pair_[{tail, head}];
    if (ids.empty() || parallel) {
      ids.push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({tail, head});
      return ids.back();
    }
    return ids.front();
  }
  std::vector<Arc> arcs() const { return arcs_; }

 private:
  std::vector<Arc> arcs_;
  std::map<std::pair<int, int>, std::vector<int>> by_pair_;
};

std::vector<int> Range(int from, int to) {
  std::vector<int> out;
  for (int v = from; v < to; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::vector<int>> RandomSets(Rng& rng, int ground, int colors, int num,
                                         int den) {
  std::vector<std::vector<int>> sets(colors);
  for (auto& set : sets) {
    for (int x = 0; x < ground; ++x) {
      if (rng.Chance(num, den)) set.push_back(x);
    }
  }
  return sets;
}

Graph RandomGraph(Rng& rng, int n, int num, int den) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Chance(num, den)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

EdgeFamily RandomGeneralMatchings(const std::vector<int>& sizes, int vertices,
                                  Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> colors;
  for (int size : sizes) {
    const std::vector<int> order = rng.Permutation(vertices);
    std::vector<int> ids;
    for (int i = 0; i < size; ++i) {
      ids.push_back(static_cast<int>(edges.size()));
      edges.push_back({order[2 * i], order[2 * i + 1]});
    }
    colors.push_back(std::move(ids));
  }
  return EdgeFamily(Graph(vertices, std::move(edges)), std::move(colors));
}

Network RandomNetwork(Rng& rng, int sources, int inner, int targets, int num_arcs) {
  const int n = sources + inner + targets;
  std::vector<Arc> arcs;
  if (sources + inner == 0 || inner + targets == 0) {
    return Network(n, {}, Range(0, sources), Range(sources + inner, n));
  }
  while (static_cast<int>(arcs.size()) < num_arcs) {
    const int tail = rng.Below(sources + inner);
    const int head = sources + rng.Below(inner + targets);
    if (tail == head) {
      if (inner <= 1 && targets == 0) break;
      continue;
    }
    arcs.push_back({tail, head});
  }
  return Network(n, std::move(arcs), Range(0, sources), Range(sources + inner, n));
}

std::vector<int> RandomLinearish(Rng& rng, const Network& network) {
  std::vector<int> order = rng.Permutation(network.num_arcs());
  const int keep = rng.Between(0, network.num_arcs());
  std::vector<char> out_used(network.num_vertices(), 0);
  std::vector<char> in_used(network.num_vertices(), 0);
  std::vector<int> chosen;
  for (int i = 0; i < keep; ++i) {
    const Arc& arc = network.arc(order[i]);
    if (out_used[arc.tail] || in_used[arc.head]) continue;
    out_used[arc.tail] = in_used[arc.head] = 1;
    chosen.push_back(order[i]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

PathInstance RandomPathInstance(Rng& rng, int inner, int num_paths) {
  const int s = 0;
  const int t = inner + 1;
  ArcBuilder builder;
  std::vector<std::vector<int>> paths;
  for (int i = 0; i < num_paths; ++i) {
    std::vector<int> via = rng.Permutation(inner);
    via.resize(rng.Between(0, inner));
    std::vector<int> path;
    int at = s;
    for (int x : via) {
      path.push_back(builder.Get(at, x + 1, rng.Chance(1, 6)));
      at = x + 1;
    }
    path.push_back(builder.Get(at, t, rng.Chance(1, 6)));
    paths.push_back(std::move(path));
  }
  return {Network(inner + 2, builder.arcs(), {s}, {t}), std::move(paths)};
}

std::vector<std::vector<int>> RandomScrambling(Rng& rng,
                                               const std::vector<std::vector<int>>& paths,
                                               int n) {
  std::vector<int> pool;
  std::map<int, int> multiplicity;
  for (const auto& path : paths) {
    for (int a : path) {
      pool.push_back(a);
      ++multiplicity[a];
    }
  }
  if (pool.empty()) return {};
  int most = 0;
  for (const auto& [arc, count] : multiplicity) most = std::max(most, count);
  int classes = std::max<int>(most, (static_cast<int>(pool.size()) + n - 1) / n) +
                rng.Between(0, 1);
  for (;;) {
    rng.Shuffle(pool);
    std::vector<std::vector<int>> out(classes);
    bool stuck = false;
    for (int a : pool) {
      std::vector<int> open;
      for (int c = 0; c < classes; ++c) {
        if (static_cast<int>(out[c].size()) < n &&
            std::find(out[c].begin(), out[c].end(), a) == out[c].end()) {
          open.push_back(c);
        }
      }
      if (open.empty()) {
        stuck = true;
        break;
      }
      out[open[rng.Below(static_cast<int>(open.size()))]].push_back(a);
    }
    if (!stuck) {
      std::erase_if(out, [](const std::vector<int>& c) { return c.empty(); });
      for (auto& c : out) std::sort(c.begin(), c.end());
      return out;
    }
    ++classes;
  }
}

DisjointPathsInstance RandomDisjointPathsInstance(Rng& rng, int p, int inner) {
  const int sources = p + rng.Between(0, 1);
  const int targets = p + rng.Between(0, 1);
  const int n = sources + inner + targets;
  auto inner_vertex = [&](int i) { return sources + i; };
  auto target_vertex = [&](int i) { return sources + inner + i; };
  ArcBuilder builder;
  const int count = 2 * p - 1 + inner;
  std::vector<std::vector<int>> families;
  for (int f = 0; f < count; ++f) {
    const std::vector<int> from = rng.Sample(sources, p);
    const std::vector<int> to = rng.Sample(targets, p);
    std::vector<std::vector<int>> routes(p);
    for (int x : rng.Permutation(inner)) {
      const int slot = rng.Below(p + 1);
      if (slot < p) routes[slot].push_back(inner_vertex(x));
    }
    std::set<int> family;
    std::vector<int> shuffled_to = to;
    rng.Shuffle(shuffled_to);
    for (int i = 0; i < p; ++i) {
      int at = from[i];
      for (int v : routes[i]) {
        family.insert(builder.Get(at, v, rng.Chance(1, 8)));
        at = v;
      }
      family.insert(builder.Get(at, target_vertex(shuffled_to[i]), rng.Chance(1, 8)));
    }
    const int noise = rng.Between(0, 2);
    for (int i = 0; i < noise; ++i) {
      const int tail = rng.Below(sources + inner);
      const int head = sources + rng.Below(inner + targets);
      if (tail != head) family.insert(builder.Get(tail, head, false));
    }
    families.emplace_back(family.begin(), family.end());
  }
  return {Network(n, builder.arcs(), Range(0, sources),
                  Range(sources + inner, n)),
          std::move(families)};
}

}  // namespace rainbow::testing
