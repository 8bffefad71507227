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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rainbow/errors.h"
#include "rainbow/rainbow_matching.h"

namespace rainbow {
namespace {

std::vector<int> Merge(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Trims `candidate` to `n` edges while keeping `k` represented classes.
std::optional<RepeatsWitness> Accept(const EdgeFamily& family,
                                     std::vector<int> candidate, int k, int n) {
  std::sort(candidate.begin(), candidate.end());
  candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
  if (static_cast<int>(candidate.size()) < n) return std::nullopt;
  if (!IsMatching(family.graph(), candidate)) return std::nullopt;
  ChoiceFunction rep = MaxRepresentation(family, candidate);
  if (rep.size() < k) return std::nullopt;
  RepeatsWitness witness;
  std::vector<int> keep;
  for (const auto& [color, edge] : rep.assignments()) {
    if (static_cast<int>(keep.size()) == k) break;
    witness.representation.Assign(color, edge);
    keep.push_back(edge);
  }
  for (int id : candidate) {
    if (static_cast<int>(keep.size()) == n) break;
    if (std::find(keep.begin(), keep.end(), id) == keep.end()) keep.push_back(id);
  }
  std::sort(keep.begin(), keep.end());
  witness.matching.edges = std::move(keep);
  return witness;
}

class MatchingEnumerator {
 public:
  MatchingEnumerator(const EdgeFamily& family, std::vector<int> pool, int k, int n)
      : family_(family), pool_(std::move(pool)), k_(k), n_(n) {}

  std::optional<RepeatsWitness> Run() {
    Extend(0);
    return found_;
  }

 private:
  void Extend(std::size_t from) {
    if (found_) return;
    if (static_cast<int>(current_.size()) == n_) {
      found_ = Accept(family_, current_, k_, n_);
      return;
    }
    const std::size_t need = n_ - current_.size();
    for (std::size_t i = from; i + need <= pool_.size() && !found_; ++i) {
      const Edge& e = family_.graph().edge(pool_[i]);
      if (used_.count(e.u) || used_.count(e.v)) continue;
      used_.insert(e.u);
      used_.insert(e.v);
      current_.push_back(pool_[i]);
      Extend(i + 1);
      current_.pop_back();
      used_.erase(e.u);
      used_.erase(e.v);
    }
  }

  const EdgeFamily& family_;
  std::vector<int> pool_;
  int k_;
  int n_;
  std::vector<int> current_;
  std::multiset<int> used_;
  std::optional<RepeatsWitness> found_;
};

std::optional<RepeatsWitness> ExactRepeats(const EdgeFamily& family, int k, int n) {
  std::vector<int> pool;
  for (const auto& ids : family.colors()) pool = Merge(std::move(pool), ids);
  return MatchingEnumerator(family, std::move(pool), k, n).Run();
}

// Connected components of the edge set `ids`, each as a list of edge ids.
std::vector<std::vector<int>> Components(const Graph& graph,
                                         const std::vector<int>& ids) {
  std::vector<int> parent(graph.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int id : ids) {
    const Edge& e = graph.edge(id);
    parent[find(e.u)] = find(e.v);
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(graph.num_vertices(), -1);
  for (int id : ids) {
    const int root = find(graph.edge(id).u);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(id);
  }
  return groups;
}

bool In(const std::vector<int>& sorted, int id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::optional<RepeatsWitness> ConstructTwo(const EdgeFamily& family, int n) {
  const Graph& g = family.graph();
  const auto& m1 = family.color(0);
  const auto& m2 = family.color(1);
  const auto& m3 = family.color(2);
  const auto parts = Components(g, Merge(m2, m3));

  if (parts.size() >= 2) {
    std::vector<int> pick(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int a = 0;
      int b = 0;
      for (int id : parts[i]) {
        a += In(m2, id);
        b += In(m3, id);
      }
      pick[i] = a >= b ? 1 : 2;
    }
    auto build = [&](const std::vector<int>& choice) {
      std::vector<int> edges;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& side = choice[i] == 1 ? m2 : m3;
        for (int id : parts[i]) {
          if (In(side, id)) edges.push_back(id);
        }
      }
      return edges;
    };
    if (auto w = Accept(family, build(pick), 2, n)) return w;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> flipped = pick;
      flipped[i] = 3 - flipped[i];
      if (auto w = Accept(family, build(flipped), 2, n)) return w;
    }
  }

  // One component (or the split above failed): the endpoints of an edge of
  // the first class cut the union into arcs, each taken from one side.
  for (int e : m1) {
    const Edge& chord = g.edge(e);
    std::vector<int> rest;
    for (int id : Merge(m2, m3)) {
      const Edge& f = g.edge(id);
      if (id != e && !f.Touches(chord.u) && !f.Touches(chord.v)) rest.push_back(id);
    }
    const auto arcs = Components(g, rest);
    if (arcs.size() > 16) continue;
    for (std::uint32_t mask = 0; mask < (1u << arcs.size()); ++mask) {
      std::vector<int> edges{e};
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto& side = (mask >> i) & 1 ? m3 : m2;
        for (int id : arcs[i]) {
          if (In(side, id)) edges.push_back(id);
        }
      }
      if (auto w = Accept(family, edges, 2, n)) return w;
    }
  }
  return std::nullopt;
}

void Require(const EdgeFamily& family, int color, int size) {
  const auto& ids = family.color(color);
  if (!IsMatching(family.graph(), ids)) {
    throw HypothesisError("matching " + std::to_string(color) + " is not a matching",
                          {color});
  }
  if (static_cast<int>(ids.size()) < size) {
    throw HypothesisError("matching " + std::to_string(color) + " has " +
                              std::to_string(ids.size()) + " edges, needs " +
                              std::to_string(size),
                          {color});
  }
}

}  // namespace

std::optional<RepeatsWitness> RepeatsMatching(const EdgeFamily& family, int k, int n,
                                              RepeatsMethod method) {
  if (k < 1 || n < 0) throw InputError("need k >= 1 and n >= 0");
  if (k > n) throw HypothesisError("k must not exceed n", {});
  if (family.num_colors() != 2 * k - 1) {
    throw HypothesisError("expected " + std::to_string(2 * k - 1) +
                              " matchings, got " +
                              std::to_string(family.num_colors()),
                          {});
  }
  for (int c = 0; c < family.num_colors(); ++c) {
    Require(family, c, (k == 2 && c == 0) ? 1 : n);
  }
  if (k == 2 && method != RepeatsMethod::kExact) {
    if (auto w = ConstructTwo(family, n)) {
      w->constructive = true;
      return w;
    }
  }
  if (method == RepeatsMethod::kConstructive) return std::nullopt;
  if (auto w = ExactRepeats(family, k, n)) return w;
  throw TheoremViolation("repeats: no matching of size " + std::to_string(n) +
                         " represents " + std::to_string(k) + " matchings");
}

}  // namespace rainbow
