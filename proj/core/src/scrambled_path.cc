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
#include <bit>
#include <queue>
#include <set>
#include <string>

#include "rainbow/errors.h"
#include "rainbow/network_paths.h"
#include "rainbow/transversal.h"

namespace rainbow {
namespace {

std::vector<Occurrence> Occurrences(const Network& network,
                                    const std::vector<std::vector<int>>& classes) {
  std::vector<Occurrence> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int a : classes[c]) {
      if (!network.HasArc(a)) throw InputError("unknown arc " + std::to_string(a));
      out.push_back({static_cast<int>(c), a});
    }
  }
  std::sort(out.begin(), out.end(), [](const Occurrence& x, const Occurrence& y) {
    return std::pair(x.arc, x.color) < std::pair(y.arc, y.color);
  });
  return out;
}

// Arcs of a shortest s-t path within `arcs`, or empty when t is unreachable.
std::vector<int> ForwardPath(const Network& network, const std::vector<int>& arcs) {
  const int s = network.SingleSource();
  const int t = network.SingleTarget();
  std::vector<std::vector<int>> out(network.num_vertices());
  for (int a : arcs) out[network.arc(a).tail].push_back(a);
  for (auto& list : out) std::sort(list.begin(), list.end());
  std::vector<int> via(network.num_vertices(), -1);
  std::vector<bool> seen(network.num_vertices(), false);
  std::queue<int> queue;
  queue.push(s);
  seen[s] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int a : out[u]) {
      const int v = network.arc(a).head;
      if (seen[v]) continue;
      seen[v] = true;
      via[v] = a;
      queue.push(v);
    }
  }
  std::vector<int> path;
  if (!seen[t]) return path;
  for (int v = t; v != s; v = network.arc(via[v]).tail) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TowerPair BuildTowers(const Network& network,
                      const std::vector<std::vector<int>>& classes, int n) {
  if (n < 1) throw InputError("tower multiplicity must be positive");
  const int s = network.SingleSource();
  const int t = network.SingleTarget();
  const std::vector<Occurrence> occurrences = Occurrences(network, classes);
  std::vector<int> where(network.num_vertices(), 0);  // 1 source, 2 target
  TowerPair towers;
  towers.source.order = {s};
  towers.target.order = {t};
  towers.source.incident.emplace_back();
  towers.target.incident.emplace_back();
  where[s] = 1;
  where[t] = 2;

  bool grown = true;
  while (grown) {
    grown = false;
    for (int side = 1; side <= 2 && !grown; ++side) {
      for (int w = 0; w < network.num_vertices() && !grown; ++w) {
        if (where[w] != 0) continue;
        std::vector<Occurrence> incident;
        for (const Occurrence& o : occurrences) {
          const Arc& arc = network.arc(o.arc);
          const bool hit = side == 1 ? (arc.head == w && where[arc.tail] == 1)
                                     : (arc.tail == w && where[arc.head] == 2);
          if (hit) incident.push_back(o);
        }
        if (static_cast<int>(incident.size()) < n) continue;
        Tower& tower = side == 1 ? towers.source : towers.target;
        tower.order.push_back(w);
        tower.incident.push_back(std::move(incident));
        where[w] = side;
        grown = true;
      }
    }
  }
  return towers;
}

bool SatisfiesUnionBound(const PathEnforcer& enforcer, int n) {
  const int m = static_cast<int>(enforcer.size());
  if (m > 24) throw CapExceeded("union bound check is limited to 24 members");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::set<Occurrence> all;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) all.insert(enforcer[i].begin(), enforcer[i].end());
    }
    const long long members = std::popcount(mask);
    if (static_cast<long long>(all.size()) < n * (members - 1) + 1) return false;
  }
  return true;
}

std::optional<bool> EnforcesPath(const Network& network, const PathEnforcer& enforcer,
                                 std::int64_t cap) {
  std::int64_t product = 1;
  for (const auto& member : enforcer) {
    if (member.empty()) return false;
    product *= static_cast<std::int64_t>(member.size());
    if (product > cap) return std::nullopt;
  }
  std::vector<std::size_t> pick(enforcer.size(), 0);
  std::vector<int> arcs(enforcer.size());
  while (true) {
    for (std::size_t i = 0; i < enforcer.size(); ++i) arcs[i] = enforcer[i][pick[i]].arc;
    if (ForwardPath(network, arcs).empty() &&
        network.SingleSource() != network.SingleTarget()) {
      return false;
    }
    std::size_t i = 0;
    while (i < enforcer.size() && ++pick[i] == enforcer[i].size()) pick[i++] = 0;
    if (i == enforcer.size()) return true;
  }
}

ScrambledPathResult ScrambledRainbowPath(const Network& network,
                                         const std::vector<std::vector<int>>& paths,
                                         const std::vector<std::vector<int>>& scrambled,
                                         int n) {
  if (n < 1) throw InputError("n must be positive");
  const int s = network.SingleSource();
  const int t = network.SingleTarget();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    try {
      ValidatePath(network, paths[i], s, t);
    } catch (const InputError& e) {
      throw HypothesisError("path " + std::to_string(i) + ": " + e.what(),
                            {static_cast<int>(i)});
    }
  }
  const int k = network.num_inner();
  if (2 * static_cast<long long>(paths.size()) <= static_cast<long long>(n) * k) {
    throw HypothesisError("need more than " + std::to_string(n * k) +
                              "/2 paths, got " + std::to_string(paths.size()),
                          {});
  }
  ValidateScrambling(paths, scrambled, n);

  ScrambledPathResult result;
  result.towers = BuildTowers(network, scrambled, n);
  const std::vector<Occurrence> occurrences = Occurrences(network, scrambled);
  std::vector<int> where(network.num_vertices(), 0);
  for (int v : result.towers.source.order) where[v] = 1;
  for (int v : result.towers.target.order) where[v] = 2;

  for (std::size_t i = 1; i < result.towers.source.order.size(); ++i) {
    result.enforcer.push_back(result.towers.source.incident[i]);
  }
  for (std::size_t i = 1; i < result.towers.target.order.size(); ++i) {
    result.enforcer.push_back(result.towers.target.incident[i]);
  }
  for (int w = 0; w < network.num_vertices() && !result.bridge_vertex; ++w) {
    if (where[w] != 0) continue;
    std::vector<Occurrence> in, out;
    for (const Occurrence& o : occurrences) {
      const Arc& arc = network.arc(o.arc);
      if (arc.head == w && where[arc.tail] == 1) in.push_back(o);
      if (arc.tail == w && where[arc.head] == 2) out.push_back(o);
    }
    if (static_cast<int>(in.size() + out.size()) > n) {
      if (in.empty() || out.empty()) {
        throw TheoremViolation("bridge vertex " + std::to_string(w) +
                               " should have joined a tower");
      }
      result.bridge_vertex = w;
      result.enforcer.push_back(std::move(in));
      result.enforcer.push_back(std::move(out));
    }
  }
  if (!result.bridge_vertex) {
    auto it = std::find_if(occurrences.begin(), occurrences.end(),
                           [&](const Occurrence& o) {
                             const Arc& arc = network.arc(o.arc);
                             return where[arc.tail] == 1 && where[arc.head] == 2;
                           });
    if (it == occurrences.end()) {
      throw TheoremViolation("no arc joins the source tower to the target tower");
    }
    result.enforcer.push_back({*it});
  }

  // Hall between enforcer members and the scrambled classes they meet.
  std::vector<std::vector<int>> met;
  for (const auto& member : result.enforcer) {
    met.emplace_back();
    for (const Occurrence& o : member) met.back().push_back(o.color);
  }
  const ColoredFamily classes_met(static_cast<int>(scrambled.size()), met);
  const RainbowOutcome outcome = HallRainbow(classes_met);
  const auto* choice = std::get_if<ChoiceFunction>(&outcome);
  if (choice == nullptr) {
    throw TheoremViolation("enforcer members meet too few scrambled classes");
  }
  std::vector<int> arcs;
  std::vector<int> arc_color(network.num_arcs(), -1);
  for (const auto& [member, color] : choice->assignments()) {
    for (const Occurrence& o : result.enforcer[member]) {
      if (o.color != color) continue;
      arcs.push_back(o.arc);
      if (arc_color[o.arc] < 0) arc_color[o.arc] = color;
      break;
    }
  }
  result.path.arcs = ForwardPath(network, arcs);
  if (result.path.arcs.empty() && s != t) {
    throw TheoremViolation("chosen enforcer arcs contain no s-t path");
  }
  for (int a : result.path.arcs) result.path.colors.push_back(arc_color[a]);
  result.union_bound = result.enforcer.size() <= 24 &&
                       SatisfiesUnionBound(result.enforcer, n);
  result.enforces_path = EnforcesPath(network, result.enforcer);
  return result;
}

}  // namespace rainbow
