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

#include "rainbow/rainbow_matching.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "rainbow/errors.h"
#include "rainbow/subset.h"

namespace rainbow {
namespace {

constexpr std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

class BranchAndBound {
 public:
  BranchAndBound(const EdgeFamily& family, int target,
                 std::span<const std::int64_t> weights, std::int64_t bound)
      : family_(family), target_(target), weights_(weights), bound_(bound) {
    const Graph& g = family.graph();
    if (g.num_vertices() > 64) {
      throw InputError("rainbow matching search supports at most 64 vertices");
    }
    if (family.num_colors() > Subset::kCapacity) {
      throw InputError("rainbow matching search supports at most " +
                       std::to_string(Subset::kCapacity) + " colors");
    }
    if (auto coloring = g.TwoColoring()) {
      std::uint64_t left = 0;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if ((*coloring)[v] == 0) left |= Bit(v);
      }
      left_ = left;
    }
    masks_.reserve(g.num_edges());
    for (const Edge& e : g.edges()) masks_.push_back(Bit(e.u) | Bit(e.v));
  }

  void Run() {
    Subset colors;
    for (int c = 0; c < family_.num_colors(); ++c) {
      if (!family_.color(c).empty()) colors.Insert(c);
    }
    Search(0, colors, 0);
  }

  RainbowMatching Result() const {
    RainbowMatching result;
    for (const auto& [color, edge] : best_) {
      result.choice.Assign(color, edge);
      result.matching.edges.push_back(edge);
    }
    std::sort(result.matching.edges.begin(), result.matching.edges.end());
    return result;
  }

  int best_size() const { return static_cast<int>(best_.size()); }

 private:
  bool Done() const { return best_size() >= target_; }

  void Search(std::uint64_t used, Subset colors, std::int64_t weight) {
    const int depth = static_cast<int>(stack_.size());
    if (depth > best_size()) best_ = stack_;
    if (Done()) return;

    int chosen = -1;
    int chosen_count = std::numeric_limits<int>::max();
    int active = 0;
    std::uint64_t union_mask = 0;
    std::vector<Edge> pool;
    Subset live;
    for (int c : colors) {
      int count = 0;
      for (int id : family_.color(c)) {
        if (masks_[id] & used) continue;
        if (!weights_.empty() && weight + weights_[id] > bound_) continue;
        ++count;
        pool.push_back(family_.graph().edge(id));
        union_mask |= masks_[id];
      }
      if (count == 0) continue;
      live.Insert(c);
      ++active;
      if (count < chosen_count) {
        chosen_count = count;
        chosen = c;
      }
    }
    if (chosen < 0 || depth + active <= best_size()) return;
    const int room = std::popcount(union_mask) / 2;
    if (depth + std::min(active, room) <= best_size()) return;
    std::sort(pool.begin(), pool.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    pool.erase(std::unique(pool.begin(), pool.end(),
                           [](const Edge& a, const Edge& b) {
                             return a.u == b.u && a.v == b.v;
                           }),
               pool.end());
    const int nu = internal::MatchingSize(pool, left_);
    if (depth + std::min(active, nu) <= best_size()) return;

    live.Erase(chosen);
    for (int id : family_.color(chosen)) {
      if (masks_[id] & used) continue;
      const std::int64_t next = weights_.empty() ? 0 : weight + weights_[id];
      if (!weights_.empty() && next > bound_) continue;
      stack_.emplace_back(chosen, id);
      Search(used | masks_[id], live, next);
      stack_.pop_back();
      if (Done()) return;
    }
    Search(used, live, weight);
  }

  const EdgeFamily& family_;
  int target_;
  std::span<const std::int64_t> weights_;
  std::int64_t bound_;
  std::optional<std::uint64_t> left_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::pair<int, int>> stack_;
  std::vector<std::pair<int, int>> best_;
};

bool IsMatchingOfSize(const EdgeFamily& family, int color, int size) {
  const auto& ids = family.color(color);
  return static_cast<int>(ids.size()) >= size && IsMatching(family.graph(), ids);
}

void RequireMatchingClass(const EdgeFamily& family, int color, int size) {
  if (!IsMatching(family.graph(), family.color(color))) {
    throw HypothesisError("color " + std::to_string(color) + " is not a matching",
                          {color});
  }
  if (static_cast<int>(family.color(color).size()) < size) {
    throw HypothesisError("color " + std::to_string(color) + " has " +
                              std::to_string(family.color(color).size()) +
                              " edges, fewer than " + std::to_string(size),
                          {color});
  }
}

}  // namespace

EdgeFamily::EdgeFamily(Graph graph, std::vector<std::vector<int>> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    auto& ids = colors_[c];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int id : ids) {
      if (!graph_.HasEdge(id)) {
        throw InputError("color " + std::to_string(c) + " names unknown edge " +
                         std::to_string(id));
      }
    }
  }
}

ColoredFamily EdgeFamily::AsColoredFamily() const {
  return ColoredFamily(graph_.num_edges(), colors_);
}

RainbowMatching MaxRainbowMatching(const EdgeFamily& family,
                                   std::optional<int> target) {
  BranchAndBound search(family, target.value_or(family.num_colors()), {}, 0);
  search.Run();
  return search.Result();
}

std::optional<RainbowMatching> RainbowMatchingWithinWeight(
    const EdgeFamily& family, std::span<const std::int64_t> weights, int size,
    std::int64_t bound) {
  if (static_cast<int>(weights.size()) != family.graph().num_edges()) {
    throw InputError("weights must be parallel to the edge list");
  }
  for (std::int64_t w : weights) {
    if (w < 0) throw InputError("weights must be nonnegative");
  }
  if (size <= 0) return RainbowMatching{};
  if (bound < 0) return std::nullopt;
  BranchAndBound search(family, size, weights, bound);
  search.Run();
  if (search.best_size() < size) return std::nullopt;
  return search.Result();
}

void SizeSequence::Validate() const {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw InputError("sequence entries must be nonnegative");
    if (i > 0 && sizes[i] < sizes[i - 1]) {
      throw InputError("sequence must be nondecreasing at position " +
                       std::to_string(i));
    }
  }
  if (target < 0) throw InputError("target must be nonnegative");
}

SizeSequence StairsSequence(int n) {
  SizeSequence seq;
  seq.target = n;
  for (int i = 1; i < n; ++i) seq.sizes.push_back(i);
  for (int i = 0; i < n; ++i) seq.sizes.push_back(n);
  return seq;
}

bool CheckArrowInstance(const ArrowStatement& statement, const EdgeFamily& family) {
  if (statement.a < 0 || statement.b < 0 || statement.c < 0) {
    throw InputError("arrow parameters must be nonnegative");
  }
  if (family.num_colors() != statement.a) {
    throw HypothesisError("expected " + std::to_string(statement.a) +
                              " matchings, got " +
                              std::to_string(family.num_colors()),
                          {});
  }
  if (statement.graph_class == GraphClass::kBipartite &&
      !family.graph().IsBipartite()) {
    throw HypothesisError("graph is not bipartite", {});
  }
  for (int c = 0; c < family.num_colors(); ++c) {
    RequireMatchingClass(family, c, statement.b);
  }
  return MaxRainbowMatching(family, statement.c).size() >= statement.c;
}

bool CheckSequenceInstance(const SizeSequence& sequence, const EdgeFamily& family) {
  sequence.Validate();
  if (family.num_colors() != static_cast<int>(sequence.sizes.size())) {
    throw HypothesisError("expected " + std::to_string(sequence.sizes.size()) +
                              " matchings, got " +
                              std::to_string(family.num_colors()),
                          {});
  }
  for (int c = 0; c < family.num_colors(); ++c) {
    RequireMatchingClass(family, c, sequence.sizes[c]);
  }
  return MaxRainbowMatching(family, sequence.target).size() >= sequence.target;
}

RainbowMatching CooperativeDriskoCheck(const EdgeFamily& family, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  if (family.num_colors() != 2 * k - 1 && !(k == 0 && family.num_colors() == 0)) {
    throw HypothesisError("expected " + std::to_string(2 * k - 1) +
                              " edge sets, got " +
                              std::to_string(family.num_colors()),
                          {});
  }
  if (!family.graph().IsBipartite()) {
    throw HypothesisError("graph is not bipartite", {});
  }
  for (int c = 0; c < family.num_colors(); ++c) {
    if (family.color(c).empty()) {
      throw HypothesisError("edge set " + std::to_string(c) + " is empty", {c});
    }
  }
  for (int i = 0; i < family.num_colors(); ++i) {
    for (int j = i + 1; j < family.num_colors(); ++j) {
      std::vector<int> both = family.color(i);
      both.insert(both.end(), family.color(j).begin(), family.color(j).end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      if (MaxMatching(family.graph(), both).size() < k) {
        throw HypothesisError("edge sets " + std::to_string(i) + " and " +
                                  std::to_string(j) + " have matching number below " +
                                  std::to_string(k),
                              {i, j});
      }
    }
  }
  RainbowMatching result = MaxRainbowMatching(family, k);
  if (result.size() < k) {
    throw TheoremViolation("cooperative Drisko: no rainbow matching of size " +
                           std::to_string(k));
  }
  return result;
}

ScrambledMatchingResult ScrambledMatchingCheck(const EdgeFamily& original,
                                               const EdgeFamily& scrambled, int n) {
  if (n < 0) throw InputError("n must be nonnegative");
  if (original.graph().num_edges() != scrambled.graph().num_edges()) {
    throw InputError("scrambling must live on the same graph");
  }
  ValidateScrambling(original.colors(), scrambled.colors(), n);
  ScrambledMatchingResult result;
  bool sized = true;
  for (int c = 0; c < original.num_colors(); ++c) {
    sized = sized && IsMatchingOfSize(original, c, n);
  }
  // 2|F| >= 2n^2 - n keeps the threshold integral.
  result.guaranteed = sized && original.graph().IsBipartite() &&
                      2 * original.num_colors() >= 2 * n * n - n;
  result.best = MaxRainbowMatching(scrambled, n);
  if (result.guaranteed && result.best.size() < n) {
    throw TheoremViolation("scrambled matchings: no rainbow matching of size " +
                           std::to_string(n));
  }
  return result;
}

ChoiceFunction MaxRepresentation(const EdgeFamily& family,
                                 std::span<const int> matching) {
  const int colors = family.num_colors();
  const int m = static_cast<int>(matching.size());
  std::vector<Edge> incidence;
  std::vector<std::pair<int, int>> labels;
  for (int c = 0; c < colors; ++c) {
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(family.color(c).begin(), family.color(c).end(),
                             matching[i])) {
        incidence.push_back({c, colors + i});
        labels.emplace_back(c, matching[i]);
      }
    }
  }
  std::vector<int> sides(colors + m, 0);
  std::fill(sides.begin() + colors, sides.end(), 1);
  const Graph bipartite(colors + m, std::move(incidence), std::move(sides));
  ChoiceFunction result;
  for (int id : MaxMatching(bipartite).edges) {
    result.Assign(labels[id].first, labels[id].second);
  }
  return result;
}

}  // namespace rainbow
