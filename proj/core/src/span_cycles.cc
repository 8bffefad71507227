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

#include "rainbow/span_cycles.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "rainbow/errors.h"
#include "rainbow/gf2.h"
#include "rainbow/rng.h"
#include "rainbow/transversal.h"

namespace rainbow {
namespace {

std::string Describe(const std::vector<int>& colors) {
  std::string out = "{";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    out += (i ? "," : "") + std::to_string(colors[i]);
  }
  return out + "}";
}

std::vector<int> FromMask(std::uint64_t mask) {
  std::vector<int> colors;
  for (; mask != 0; mask &= mask - 1) colors.push_back(std::countr_zero(mask));
  return colors;
}

// Splits an edge set with all degrees even into edge-disjoint cycles, each
// in traversal order.
std::vector<std::vector<int>> CycleDecomposition(const Graph& graph,
                                                 const std::vector<int>& edges) {
  std::vector<std::vector<int>> incident(graph.num_vertices());
  for (int e : edges) {
    incident[graph.edge(e).u].push_back(e);
    incident[graph.edge(e).v].push_back(e);
  }
  std::vector<bool> used(graph.num_edges(), false);
  std::vector<int> position(graph.num_vertices(), -1);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < graph.num_vertices(); ++start) {
    std::vector<int> walk_vertices{start};
    std::vector<int> walk_edges;
    position[start] = 0;
    while (!walk_vertices.empty()) {
      const int u = walk_vertices.back();
      int next = -1;
      for (int e : incident[u]) {
        if (!used[e]) {
          next = e;
          break;
        }
      }
      if (next < 0) {
        position[u] = -1;
        walk_vertices.pop_back();
        if (!walk_edges.empty()) walk_edges.pop_back();
        continue;
      }
      used[next] = true;
      const int w = graph.edge(next).Other(u);
      if (position[w] >= 0) {
        std::vector<int> cycle(walk_edges.begin() + position[w], walk_edges.end());
        cycle.push_back(next);
        cycles.push_back(std::move(cycle));
        while (walk_vertices.back() != w) {
          position[walk_vertices.back()] = -1;
          walk_vertices.pop_back();
          walk_edges.pop_back();
        }
      } else {
        position[w] = static_cast<int>(walk_vertices.size());
        walk_vertices.push_back(w);
        walk_edges.push_back(next);
      }
    }
  }
  return cycles;
}

RainbowCycle OddCyclePipeline(const Graph& graph,
                              const std::vector<std::vector<int>>& families) {
  const int n = graph.num_vertices();
  const std::vector<std::uint64_t> vectors = AugmentedEdgeVectors(graph);
  const std::uint64_t parity = ParityVector(n);
  const int num_edges = graph.num_edges();
  std::vector<std::uint64_t> columns = vectors;
  columns.push_back(parity);
  const int pad = n - Gf2Rank(columns);
  if (pad < 0) throw TheoremViolation("augmented edge vectors exceed rank n");
  const Matroid binary = Matroid::Binary(BinaryMatrix(n + 1, columns));
  const Matroid matroid =
      pad > 0 ? Matroid::DirectSum(binary, Matroid::Free(pad)) : binary;

  SpanningOptions options;
  options.validate = false;
  const SpanningResult spanning =
      RainbowSpanningSet(matroid, Subset().With(num_edges), families, options);

  std::vector<int> chosen;
  std::vector<int> color_of(num_edges, -1);
  for (const auto& [color, edge] : spanning.choice.assignments()) {
    if (edge >= num_edges) continue;
    chosen.push_back(edge);
    color_of[edge] = color;
  }
  std::vector<std::uint64_t> chosen_vectors;
  for (int e : chosen) chosen_vectors.push_back(vectors[e]);
  const auto support = Gf2MinimumSupportSolution(chosen_vectors, parity);
  if (!support) throw TheoremViolation("rainbow set does not span the parity vector");
  std::vector<int> odd_part;
  for (int i : *support) odd_part.push_back(chosen[i]);

  for (auto& cycle : CycleDecomposition(graph, odd_part)) {
    if (cycle.size() % 2 == 0) continue;
    RainbowCycle result;
    result.edges = std::move(cycle);
    for (int e : result.edges) result.colors.push_back(color_of[e]);
    return result;
  }
  throw TheoremViolation("odd-parity edge set decomposed into even cycles only");
}

}  // namespace

SpanningResult RainbowSpanningSet(const Matroid& matroid, const Subset& target,
                                  const std::vector<std::vector<int>>& sets,
                                  const SpanningOptions& options) {
  const int n = static_cast<int>(sets.size());
  const ColoredFamily family(matroid.ground_size(), sets);
  for (int t : target) {
    if (t >= matroid.ground_size()) throw InputError("target outside the ground set");
  }
  const int rank = Rank(matroid, Subset::Range(matroid.ground_size()));
  if (rank != n) {
    throw HypothesisError("matroid rank is " + std::to_string(rank) + ", expected " +
                              std::to_string(n),
                          {});
  }
  auto union_of = [&](const std::vector<int>& colors) {
    Subset all;
    for (int c : colors) {
      for (int x : family.set(c)) all.Insert(x);
    }
    return all;
  };
  auto spans_target = [&](const Subset& set) {
    for (int t : target) {
      if (!InSpan(matroid, set, t)) return false;
    }
    return true;
  };
  auto deficient = [&](const std::vector<int>& colors) {
    return Rank(matroid, union_of(colors)) < static_cast<int>(colors.size());
  };
  auto require = [&](const std::vector<int>& colors) {
    if (deficient(colors) && !spans_target(union_of(colors))) {
      throw HypothesisError("color set " + Describe(colors) +
                                " is rank deficient and does not span the target",
                            colors);
    }
  };

  if (options.validate) {
    if (n <= options.exhaustive_limit && n < 64) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        require(FromMask(mask));
      }
    } else {
      Rng rng(0x5eedULL, static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 4096; ++trial) {
        std::vector<int> colors;
        for (int c = 0; c < n; ++c) {
          if (rng.Chance(1, 2)) colors.push_back(c);
        }
        if (!colors.empty()) require(colors);
      }
    }
  }

  SpanningResult result;
  RainbowOutcome outcome = RadoRainbow(family, matroid);
  if (auto* choice = std::get_if<ChoiceFunction>(&outcome)) {
    result.choice = std::move(*choice);
    if (!spans_target(Subset(result.choice.Image()))) {
      throw TheoremViolation("rainbow base does not span the target");
    }
    return result;
  }

  std::vector<int> J = std::get<Violator>(outcome).colors;
  while (true) {
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      for (std::size_t i = 0; i < J.size(); ++i) {
        std::vector<int> smaller = J;
        smaller.erase(smaller.begin() + i);
        if (!smaller.empty() && deficient(smaller)) {
          J = std::move(smaller);
          shrunk = true;
          break;
        }
      }
    }
    const std::vector<int> rest(J.begin() + 1, J.end());
    RainbowOutcome partial = RadoRainbow(family.Restrict(rest), matroid);
    if (auto* violator = std::get_if<Violator>(&partial)) {
      std::vector<int> mapped;
      for (int c : violator->colors) mapped.push_back(rest[c]);
      J = std::move(mapped);
      continue;
    }
    const Subset span_of_j = union_of(J);
    if (!spans_target(span_of_j)) {
      throw HypothesisError("color set " + Describe(J) +
                                " is rank deficient and does not span the target",
                            J);
    }
    for (const auto& [c, e] : std::get<ChoiceFunction>(partial).assignments()) {
      result.choice.Assign(rest[c], e);
    }
    const Subset image(result.choice.Image());
    const int rank_r = Rank(matroid, image);
    if (rank_r != static_cast<int>(J.size()) - 1 ||
        Rank(matroid, span_of_j) != rank_r || !spans_target(image)) {
      throw TheoremViolation("rainbow set for " + Describe(J) +
                             " does not span the target");
    }
    result.deficient = J;
    return result;
  }
}

std::vector<std::uint64_t> AugmentedEdgeVectors(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n > 63) throw InputError("augmented edge vectors support at most 63 vertices");
  std::vector<std::uint64_t> out;
  out.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    out.push_back((std::uint64_t{1} << e.u) ^ (std::uint64_t{1} << e.v) ^
                  ParityVector(n));
  }
  return out;
}

std::uint64_t ParityVector(int num_vertices) {
  return std::uint64_t{1} << num_vertices;
}

bool IsBipartiteViaSpan(const Graph& graph) {
  return !Gf2InSpan(AugmentedEdgeVectors(graph), ParityVector(graph.num_vertices()));
}

RainbowCycle RainbowOddCycle(const Graph& graph,
                             const std::vector<std::vector<int>>& families) {
  const int n = graph.num_vertices();
  if (static_cast<int>(families.size()) != n) {
    throw HypothesisError("expected " + std::to_string(n) + " edge sets, got " +
                              std::to_string(families.size()),
                          {});
  }
  const std::vector<std::uint64_t> vectors = AugmentedEdgeVectors(graph);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> own;
    for (int e : families[i]) {
      if (!graph.HasEdge(e)) throw InputError("unknown edge " + std::to_string(e));
      own.push_back(vectors[e]);
    }
    if (!Gf2InSpan(own, ParityVector(n))) {
      throw HypothesisError("edge set " + std::to_string(i) + " has no odd cycle", {i});
    }
  }
  return OddCyclePipeline(graph, families);
}

RainbowCycle CooperativeOddCycle(const Graph& graph,
                                 const std::vector<std::vector<int>>& families) {
  const int n = graph.num_vertices();
  if (static_cast<int>(families.size()) != n) {
    throw HypothesisError("expected " + std::to_string(n) + " edge sets, got " +
                              std::to_string(families.size()),
                          {});
  }
  if (n > 20) throw CapExceeded("cooperative check is limited to 20 edge sets");
  for (const auto& family : families) {
    for (int e : family) {
      if (!graph.HasEdge(e)) throw InputError("unknown edge " + std::to_string(e));
    }
  }
  std::vector<int> parent(n), parity(n);
  auto find = [&](auto&& self, int v) -> std::pair<int, int> {
    if (parent[v] == v) return {v, 0};
    auto [root, p] = self(self, parent[v]);
    parent[v] = root;
    parity[v] ^= p;
    return {root, parity[v]};
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(parity.begin(), parity.end(), 0);
    int rank = 0;
    bool odd = false;
    for (int c : FromMask(mask)) {
      for (int e : families[c]) {
        const auto [ru, pu] = find(find, graph.edge(e).u);
        const auto [rv, pv] = find(find, graph.edge(e).v);
        if (ru == rv) {
          odd = odd || pu == pv;
        } else {
          parent[ru] = rv;
          parity[ru] = pu ^ pv ^ 1;
          ++rank;
        }
      }
    }
    const int size = std::popcount(mask);
    if (rank < size && !odd) {
      const std::vector<int> colors = FromMask(mask);
      throw HypothesisError("edge sets " + Describe(colors) + " have component sum " +
                                std::to_string(rank) + " and no odd cycle",
                            colors);
    }
  }
  return OddCyclePipeline(graph, families);
}

bool IsRainbowOddCycle(const Graph& graph, const std::vector<std::vector<int>>& families,
                       const RainbowCycle& cycle) {
  const std::size_t len = cycle.edges.size();
  if (len < 3 || len % 2 == 0 || cycle.colors.size() != len) return false;
  std::vector<int> colors = cycle.colors;
  std::sort(colors.begin(), colors.end());
  if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    const int c = cycle.colors[i];
    if (c < 0 || c >= static_cast<int>(families.size())) return false;
    const auto& set = families[c];
    if (std::find(set.begin(), set.end(), cycle.edges[i]) == set.end()) return false;
    if (!graph.HasEdge(cycle.edges[i])) return false;
  }
  // Consecutive edges must chain through distinct vertices and close up.
  const Edge& first = graph.edge(cycle.edges[0]);
  for (int start : {first.u, first.v}) {
    std::vector<bool> seen(graph.num_vertices(), false);
    int v = start;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      const Edge& e = graph.edge(cycle.edges[i]);
      if (!e.Touches(v) || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = true;
      v = e.Other(v);
    }
    if (ok && v == start) return true;
  }
  return false;
}

}  // namespace rainbow
