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

#include "rainbow/network_paths.h"

#include <algorithm>
#include <queue>
#include <string>

#include "rainbow/errors.h"
#include "rainbow/rainbow_matching.h"

namespace rainbow {

LinearishArborescence::LinearishArborescence(const Network& network,
                                             std::vector<int> arcs)
    : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  std::vector<int> in(network.num_vertices()), out(network.num_vertices());
  for (int a : arcs_) {
    if (!network.HasArc(a)) throw InputError("unknown arc " + std::to_string(a));
    const Arc& arc = network.arc(a);
    if (++out[arc.tail] > 1) {
      throw InputError("vertex " + std::to_string(arc.tail) +
                       " has out-degree above one");
    }
    if (++in[arc.head] > 1) {
      throw InputError("vertex " + std::to_string(arc.head) +
                       " has in-degree above one");
    }
  }
}

ComponentClassification Classify(const Network& network,
                                 const LinearishArborescence& forest) {
  const int n = network.num_vertices();
  std::vector<int> out_arc(n, -1), in_arc(n, -1);
  for (int a : forest.arcs()) {
    out_arc[network.arc(a).tail] = a;
    in_arc[network.arc(a).head] = a;
  }
  ComponentClassification result;
  std::vector<bool> seen(network.num_arcs(), false);
  for (int a : forest.arcs()) {
    const int start = network.arc(a).tail;
    if (in_arc[start] >= 0 || seen[a]) continue;
    std::vector<int> path;
    int v = start;
    while (out_arc[v] >= 0) {
      path.push_back(out_arc[v]);
      seen[out_arc[v]] = true;
      v = network.arc(out_arc[v]).head;
    }
    const bool s = network.IsSource(start);
    const bool t = network.IsTarget(v);
    if (s) result.from_sources.push_back(path);
    if (t) result.to_targets.push_back(path);
    if (s && t) result.source_target.push_back(path);
    if (!s && !t) result.free_paths.push_back(std::move(path));
  }
  for (int a : forest.arcs()) {
    if (seen[a]) continue;
    std::vector<int> cycle;
    for (int b = a; !seen[b]; b = out_arc[network.arc(b).head]) {
      seen[b] = true;
      cycle.push_back(b);
    }
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

BipartifiedNetwork::BipartifiedNetwork(const Network& network)
    : num_arcs_(network.num_arcs()),
      inner_(network.inner_vertices()),
      inner_index_(network.num_vertices(), -1),
      sending_(network.num_vertices(), -1),
      absorbing_(network.num_vertices(), -1) {
  int next = 0;
  std::vector<int> sides;
  for (int v = 0; v < network.num_vertices(); ++v) {
    if (!network.IsTarget(v)) {
      sending_[v] = next++;
      sides.push_back(0);
    }
  }
  for (int v = 0; v < network.num_vertices(); ++v) {
    if (!network.IsSource(v)) {
      absorbing_[v] = next++;
      sides.push_back(1);
    }
  }
  std::vector<Edge> edges;
  for (const Arc& arc : network.arcs()) {
    edges.push_back({sending_[arc.tail], absorbing_[arc.head]});
  }
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    inner_index_[inner_[i]] = static_cast<int>(i);
    edges.push_back({sending_[inner_[i]], absorbing_[inner_[i]]});
  }
  graph_ = Graph(next, std::move(edges), std::move(sides));
}

int BipartifiedNetwork::LoopEdge(int inner_vertex) const {
  const int i = inner_index_.at(inner_vertex);
  if (i < 0) throw InputError("vertex " + std::to_string(inner_vertex) + " is not inner");
  return num_arcs_ + i;
}

std::vector<int> BipartifiedNetwork::LoopEdges() const {
  std::vector<int> loops;
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    loops.push_back(num_arcs_ + static_cast<int>(i));
  }
  return loops;
}

Matching Phi(const Network& network, const BipartifiedNetwork& doubled,
             const LinearishArborescence& forest) {
  std::vector<bool> touched(network.num_vertices(), false);
  Matching m;
  for (int a : forest.arcs()) {
    touched[network.arc(a).tail] = touched[network.arc(a).head] = true;
    m.edges.push_back(a);
  }
  for (int x : network.inner_vertices()) {
    if (!touched[x]) m.edges.push_back(doubled.LoopEdge(x));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

LinearishArborescence Psi(const Network& network, const BipartifiedNetwork& doubled,
                          const Matching& matching) {
  std::vector<int> arcs;
  for (int e : matching.edges) {
    if (!doubled.IsLoopEdge(e)) arcs.push_back(e);
  }
  return LinearishArborescence(network, std::move(arcs));
}

bool CheckCountingClaim(const Network& network, const LinearishArborescence& forest) {
  const BipartifiedNetwork doubled(network);
  const ComponentClassification parts = Classify(network, forest);
  const int lhs = static_cast<int>(parts.source_target.size());
  const int rhs = Phi(network, doubled, forest).size() - network.num_inner() +
                  static_cast<int>(parts.free_paths.size());
  return lhs == rhs;
}

PathPacking NuP(const Network& network, std::span<const int> arcs) {
  // Vertex v splits into in-node 2v and out-node 2v+1 joined by a unit arc;
  // the super source is 2n and the super sink 2n+1.
  const int n = network.num_vertices();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  struct FlowArc {
    int to;
    int cap;
    int arc;  // network arc id, or -1
  };
  std::vector<FlowArc> flow;
  std::vector<std::vector<int>> adj(2 * n + 2);
  auto add = [&](int from, int to, int arc) {
    adj[from].push_back(static_cast<int>(flow.size()));
    flow.push_back({to, 1, arc});
    adj[to].push_back(static_cast<int>(flow.size()));
    flow.push_back({from, 0, -1});
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, -1);
  for (int s : network.sources()) add(source, 2 * s, -1);
  for (int t : network.targets()) add(2 * t + 1, sink, -1);
  std::vector<int> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int a : sorted) {
    if (!network.HasArc(a)) throw InputError("unknown arc " + std::to_string(a));
    add(2 * network.arc(a).tail + 1, 2 * network.arc(a).head, a);
  }

  PathPacking packing;
  while (true) {
    std::vector<int> via(2 * n + 2, -1);
    std::queue<int> queue;
    queue.push(source);
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      const int u = queue.front();
      queue.pop();
      for (int id : adj[u]) {
        if (flow[id].cap > 0 && via[flow[id].to] == -1) {
          via[flow[id].to] = id;
          queue.push(flow[id].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int v = sink; v != source;) {
      const int id = via[v];
      --flow[id].cap;
      ++flow[id ^ 1].cap;
      v = flow[id ^ 1].to;
    }
    ++packing.size;
  }

  // Walk saturated arcs from each source.
  for (int s : network.sources()) {
    int node = 2 * s + 1;
    bool used = false;
    for (int id : adj[2 * s]) {
      if (flow[id].to == 2 * s + 1 && flow[id].cap == 0) used = true;
    }
    if (!used) continue;
    std::vector<int> path;
    while (node != sink) {
      int step = -1;
      for (int id : adj[node]) {
        if (id % 2 == 0 && flow[id].cap == 0) {
          step = id;
          break;
        }
      }
      if (step < 0) break;
      if (flow[step].arc >= 0) path.push_back(flow[step].arc);
      node = flow[step].to;
      if (node != sink && node % 2 == 0) node += 1;
    }
    if (node == sink) packing.paths.push_back(std::move(path));
  }
  return packing;
}

DisjointPathsResult RainbowDisjointPaths(const Network& network,
                                         const std::vector<std::vector<int>>& colors,
                                         int p) {
  if (p < 0) throw InputError("p must be nonnegative");
  const int q = network.num_inner();
  const int m = static_cast<int>(colors.size());
  if (m != 2 * p - 1 + q) {
    throw HypothesisError("expected " + std::to_string(2 * p - 1 + q) +
                              " arc sets, got " + std::to_string(m),
                          {});
  }
  const BipartifiedNetwork doubled(network);
  std::vector<std::vector<int>> family(q, doubled.LoopEdges());
  for (int i = 0; i < m; ++i) {
    const PathPacking packing = NuP(network, colors[i]);
    if (packing.size < p) {
      throw HypothesisError("arc set " + std::to_string(i) + " carries only " +
                                std::to_string(packing.size) + " disjoint paths",
                            {i});
    }
    std::vector<int> witness;
    for (int j = 0; j < p; ++j) {
      witness.insert(witness.end(), packing.paths[j].begin(), packing.paths[j].end());
    }
    const LinearishArborescence forest(network, std::move(witness));
    family.push_back(Phi(network, doubled, forest).edges);
  }

  const EdgeFamily stairs(doubled.graph(), family);
  const RainbowMatching rainbow = MaxRainbowMatching(stairs, p + q);
  if (rainbow.size() < p + q) {
    throw TheoremViolation("stairs run found only " + std::to_string(rainbow.size()) +
                           " of " + std::to_string(p + q) + " edges");
  }
  DisjointPathsResult result;
  for (const auto& [color, edge] : rainbow.choice.assignments()) {
    if (color < q || doubled.IsLoopEdge(edge)) continue;
    result.choice.Assign(color - q, edge);
    result.arcs.push_back(edge);
  }
  std::sort(result.arcs.begin(), result.arcs.end());
  result.packing = NuP(network, result.arcs);
  if (result.packing.size < p) {
    throw TheoremViolation("rainbow arc set carries only " +
                           std::to_string(result.packing.size) + " disjoint paths");
  }
  return result;
}

}  // namespace rainbow
