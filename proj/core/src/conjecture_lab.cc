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

#include "rainbow/conjecture_lab.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "rainbow/coercive_search.h"
#include "rainbow/errors.h"
#include "rainbow/io.h"
#include "rainbow/rainbow_matching.h"

namespace rainbow {
namespace {

class TransversalSearch {
 public:
  explicit TransversalSearch(const LatinSquare& square)
      : square_(square), n_(square.order()) {}

  Transversal Run() {
    Extend(0, 0, 0);
    Transversal t;
    t.cells = best_;
    return t;
  }

 private:
  void Extend(int row, std::uint64_t cols, std::uint64_t symbols) {
    if (current_.size() > best_.size()) best_ = current_;
    if (static_cast<int>(best_.size()) == n_ || row == n_) return;
    if (static_cast<int>(current_.size()) + (n_ - row) <= static_cast<int>(best_.size())) {
      return;
    }
    for (int c = 0; c < n_; ++c) {
      const std::uint64_t col_bit = std::uint64_t{1} << c;
      const std::uint64_t sym_bit = std::uint64_t{1} << (square_.At(row, c) - 1);
      if ((cols & col_bit) || (symbols & sym_bit)) continue;
      current_.push_back({row, c});
      Extend(row + 1, cols | col_bit, symbols | sym_bit);
      current_.pop_back();
      if (static_cast<int>(best_.size()) == n_) return;
    }
    Extend(row + 1, cols, symbols);
  }

  const LatinSquare& square_;
  int n_;
  std::vector<Cell> current_;
  std::vector<Cell> best_;
};

std::int64_t Factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::vector<int>> ParamPartition(int n) {
  std::vector<std::vector<int>> parts(n);
  for (int i = 0; i < n * n; ++i) parts[i / n].push_back(i);
  return parts;
}

SweepRecord MatchingRecord(const EdgeFamily& family, int target,
                           const RainbowMatching& best) {
  SweepRecord record;
  record.counterexample = best.size() < target;
  record.instance = ToJson(family);
  record.witness = ToJson(best);
  return record;
}

SweepReport DriskoSweep(const SweepSpec& spec, const RecordSink& sink, bool stairs) {
  const int n = spec.Int("n", 3);
  if (n < 1) throw InputError("n must be positive");
  const std::vector<int> sizes =
      stairs ? StairsSequence(n).sizes : std::vector<int>(2 * n - 1, n);
  const int side = spec.Int("side", n);
  return RunSweep(
      spec, -1,
      [&](std::int64_t index) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(index));
        const EdgeFamily family = RandomBipartiteMatchings(sizes, side, rng);
        return MatchingRecord(family, n, MaxRainbowMatching(family, n));
      },
      sink);
}

SweepReport RepeatsSweep(const SweepSpec& spec, const RecordSink& sink) {
  const int k = spec.Int("k", 2);
  const int n = spec.Int("n", 3);
  const int side = spec.Int("side", n + 1);
  return RunSweep(
      spec, -1,
      [&](std::int64_t index) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(index));
        const EdgeFamily family =
            RandomBipartiteMatchings(std::vector<int>(2 * k - 1, n), side, rng);
        SweepRecord record;
        record.instance = ToJson(family);
        const auto witness = RepeatsMatching(family, k, n);
        record.witness = ToJson(*witness);
        return record;
      },
      sink);
}

std::vector<int> SharedPerfectMatching(int side, Rng& rng) {
  const std::vector<int> perm = rng.Permutation(side);
  std::vector<int> ids;
  for (int r = 0; r < side; ++r) ids.push_back(r * side + perm[r]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

Graph CompleteBipartite(int side) {
  std::vector<Edge> edges;
  std::vector<int> sides(2 * side, 0);
  std::fill(sides.begin() + side, sides.end(), 1);
  for (int u = 0; u < side; ++u) {
    for (int v = 0; v < side; ++v) edges.push_back({u, side + v});
  }
  return Graph(2 * side, std::move(edges), std::move(sides));
}

SweepReport WeightedDriskoSweep(const SweepSpec& spec, const RecordSink& sink) {
  const int n = spec.Int("n", 2);
  const int wmax = spec.Int("wmax", 3);
  if (n < 1 || n > 4) throw InputError("weighted Drisko sweep needs 1 <= n <= 4");
  if (wmax < 0) throw InputError("wmax must be nonnegative");
  const int colors = 2 * n - 1;

  auto evaluate = [&](const std::vector<std::vector<int>>& perms,
                      const std::vector<std::int64_t>& weights) {
    std::vector<Edge> edges;
    std::vector<std::vector<int>> classes;
    std::vector<int> sides(2 * n, 0);
    std::fill(sides.begin() + n, sides.end(), 1);
    for (const auto& perm : perms) {
      classes.emplace_back();
      for (int r = 0; r < n; ++r) {
        classes.back().push_back(static_cast<int>(edges.size()));
        edges.push_back({r, n + perm[r]});
      }
    }
    const EdgeFamily family(Graph(2 * n, std::move(edges), sides), std::move(classes));
    std::int64_t bound = 0;
    for (const auto& ids : family.colors()) {
      std::int64_t w = 0;
      for (int id : ids) w += weights[id];
      bound = std::max(bound, w);
    }
    const auto found = RainbowMatchingWithinWeight(family, weights, n, bound);
    SweepRecord record;
    record.counterexample = !found.has_value();
    record.instance = ToJson(family);
    record.instance["weights"] = weights;
    record.instance["bound"] = bound;
    if (found) record.witness = ToJson(*found);
    return record;
  };

  if (spec.mode == SweepMode::kRandom) {
    return RunSweep(
        spec, -1,
        [&](std::int64_t index) {
          Rng rng(spec.seed, static_cast<std::uint64_t>(index));
          std::vector<std::vector<int>> perms;
          for (int c = 0; c < colors; ++c) perms.push_back(rng.Permutation(n));
          std::vector<std::int64_t> weights(colors * n);
          for (auto& w : weights) w = rng.Between(0, wmax);
          return evaluate(perms, weights);
        },
        sink);
  }
  if (spec.mode != SweepMode::kExhaustive) {
    throw InputError("weighted Drisko sweep supports random and exhaustive modes");
  }
  // Perfect matchings of K_{n,n} with the first pinned to the identity, the
  // rest a nondecreasing sequence, times every weight pattern.
  std::vector<std::vector<int>> all_perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    all_perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> families;
  std::vector<int> pick(colors, 0);
  while (true) {
    families.push_back(pick);
    int c = colors - 1;
    while (c >= 1 && pick[c] + 1 == static_cast<int>(all_perms.size())) --c;
    if (c < 1) break;
    ++pick[c];
    for (int d = c + 1; d < colors; ++d) pick[d] = pick[c];
  }
  const int slots = colors * n;
  double patterns_d = std::pow(static_cast<double>(wmax + 1), slots);
  const std::int64_t patterns =
      patterns_d > 9e15 ? -1 : static_cast<std::int64_t>(patterns_d + 0.5);
  if (patterns < 0) throw CapExceeded("weight pattern space too large");
  const std::int64_t total = patterns * static_cast<std::int64_t>(families.size());
  return RunSweep(
      spec, total,
      [&](std::int64_t index) {
        const auto& chosen = families[index / patterns];
        std::int64_t code = index % patterns;
        std::vector<std::int64_t> weights(slots);
        for (auto& w : weights) {
          w = code % (wmax + 1);
          code /= (wmax + 1);
        }
        std::vector<std::vector<int>> perms;
        for (int p : chosen) perms.push_back(all_perms[p]);
        return evaluate(perms, weights);
      },
      sink);
}

SweepReport ShortCycleSweep(const SweepSpec& spec, const RecordSink& sink) {
  const int n = spec.Int("n", 6);
  const int r = spec.Int("r", 3);
  if (n < 2 || n > 16) throw InputError("short-cycle sweep needs 2 <= n <= 16");
  if (r < 2) throw InputError("r must be at least 2");
  const int size = (n + r - 1) / r;
  return RunSweep(
      spec, -1,
      [&](std::int64_t index) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(index));
        std::vector<Edge> edges;
        std::vector<std::vector<int>> classes(n);
        for (int c = 0; c < n; ++c) {
          for (int i = 0; i < size; ++i) {
            const int u = rng.Below(n);
            int v = rng.Below(n - 1);
            if (v >= u) ++v;
            classes[c].push_back(static_cast<int>(edges.size()));
            edges.push_back({u, v});
          }
        }
        const Graph graph(n, std::move(edges));
        const auto cycle = RainbowShortCycle(graph, classes, r, true);
        SweepRecord record;
        record.counterexample = !cycle.has_value();
        record.instance = {{"graph", ToJson(graph)}, {"colors", classes}, {"r", r}};
        if (cycle) record.witness = ToJson(*cycle);
        return record;
      },
      sink);
}

SweepReport ScrambledSharpnessSweep(const SweepSpec& spec, const RecordSink& sink) {
  const int n = spec.Int("n", 4);
  if (n < 4) {
    throw InputError("n = " + std::to_string(n) +
                     " is below the range of the sharpness construction (n >= 4)");
  }
  const int count = n * (n - 1) / 2;
  const Graph graph = CompleteBipartite(n);
  return RunSweep(
      spec, -1,
      [&](std::int64_t index) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(index));
        std::vector<std::vector<int>> original;
        std::vector<int> occurrences;
        for (int c = 0; c < count; ++c) {
          original.push_back(SharedPerfectMatching(n, rng));
          occurrences.insert(occurrences.end(), original.back().begin(),
                             original.back().end());
        }
        std::vector<std::vector<int>> scrambled;
        for (int attempt = 0; attempt < 32 && scrambled.empty(); ++attempt) {
          rng.Shuffle(occurrences);
          std::vector<std::vector<int>> classes(count);
          bool ok = true;
          for (int id : occurrences) {
            int placed = -1;
            const int offset = rng.Below(count);
            for (int j = 0; j < count && placed < 0; ++j) {
              auto& cls = classes[(offset + j) % count];
              if (static_cast<int>(cls.size()) < n &&
                  std::find(cls.begin(), cls.end(), id) == cls.end()) {
                placed = (offset + j) % count;
              }
            }
            if (placed < 0) {
              ok = false;
              break;
            }
            classes[placed].push_back(id);
          }
          if (ok) scrambled = std::move(classes);
        }
        SweepRecord record;
        record.instance = {{"graph", ToJson(graph)}, {"colors", original}};
        if (scrambled.empty()) return record;
        record.instance["scrambling"] = scrambled;
        const EdgeFamily family(graph, scrambled);
        const RainbowMatching best = MaxRainbowMatching(family, n);
        record.witness = ToJson(best);
        if (best.size() < n) {
          // Replay from scratch before reporting.
          record.counterexample =
              MaxRainbowMatching(EdgeFamily(graph, scrambled), n).size() < n;
        }
        return record;
      },
      sink);
}

SweepReport RotaSweep(const SweepSpec& spec, const RecordSink& sink) {
  const int n = spec.Int("n", 2);
  if (n < 1 || n > 4) throw InputError("rota sweep needs 1 <= n <= 4");
  const int ground = n * n;
  const auto parts = ParamPartition(n);
  return RunSweep(
      spec, -1,
      [&](std::int64_t index) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(index));
        // Redraw until the covering number is exactly n.
        for (int attempt = 0;; ++attempt) {
          Matroid m = RandomMatroid(ground, rng);
          if (CoveringNumber(m).size != n) {
            if (attempt < 200) continue;
            SweepRecord skipped;
            skipped.instance = {{"skipped", "no matroid with covering number n"}};
            return skipped;
          }
          const RotaResult result = RotaScrambledSearch(m, parts);
          SweepRecord record;
          record.counterexample = !result.conjecture_holds;
          record.instance = {{"ground_size", ground},
                             {"matroid", ToJson(m)},
                             {"parts", parts}};
          record.witness = ToJson(result.cover);
          return record;
        }
      },
      sink);
}

SweepReport TwoCoverSweep(const SweepSpec& spec, const RecordSink& sink) {
  const int max_ground = spec.Int("ground", 10);
  if (max_ground < 1 || max_ground > kMaxCoverGround) {
    throw InputError("two-cover sweep needs 1 <= ground <= " +
                     std::to_string(kMaxCoverGround));
  }
  return RunSweep(
      spec, -1,
      [&](std::int64_t index) {
        Rng rng(spec.seed, static_cast<std::uint64_t>(index));
        const int ground = rng.Between(1, max_ground);
        const Matroid first = RandomMatroid(ground, rng);
        const Matroid second = RandomMatroid(ground, rng);
        const TwoCoverReport report = CheckTwoCover(first, second);
        if (!report.holds) {
          throw TheoremViolation("covering number of the intersection exceeds twice the "
                                 "larger covering number");
        }
        SweepRecord record;
        record.counterexample = !report.within_plus_one;
        record.instance = {{"ground_size", ground},
                           {"first", ToJson(first)},
                           {"second", ToJson(second)}};
        record.witness = {{"first", report.first.size},
                          {"second", report.second.size},
                          {"intersection", ToJson(report.intersection)}};
        return record;
      },
      sink);
}

}  // namespace

Transversal MaxLatinTransversal(const LatinSquare& square) {
  if (square.order() > 64) throw InputError("orders above 64 are not supported");
  return TransversalSearch(square).Run();
}

std::vector<LatinSquare> ReducedLatinSquares(int n, std::int64_t cap) {
  if (n < 1 || n > 16) throw InputError("order must be between 1 and 16");
  std::vector<LatinSquare> out;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  std::iota(rows[0].begin(), rows[0].end(), 1);
  std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);
  for (int c = 0; c < n; ++c) {
    row_used[0] |= 1u << c;
    col_used[c] |= 1u << c;
  }
  auto fill = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      if (static_cast<std::int64_t>(out.size()) >= cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " Latin squares");
      }
      out.emplace_back(rows);
      return;
    }
    const int r = cell / n;
    const int c = cell % n;
    for (int s = 0; s < n; ++s) {
      const std::uint32_t bit = 1u << s;
      if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
      row_used[r] |= bit;
      col_used[c] |= bit;
      rows[r][c] = s + 1;
      self(self, cell + 1);
      row_used[r] &= ~bit;
      col_used[c] &= ~bit;
    }
  };
  fill(fill, n);
  return out;
}

SweepReport CheckBrs(int n, const SweepSpec& spec, const RecordSink& sink) {
  const std::vector<LatinSquare> squares = ReducedLatinSquares(n);
  const std::int64_t count = static_cast<std::int64_t>(squares.size());
  SweepReport report = RunSweep(
      spec, count,
      [&](std::int64_t index) {
        const LatinSquare& square = squares[index];
        const Transversal t = MaxLatinTransversal(square);
        SweepRecord record;
        record.counterexample = t.size() < n - 1 || (n % 2 == 1 && t.size() < n);
        record.instance = {{"latin", ToJson(square)}};
        record.witness = ToJson(t);
        return record;
      },
      sink);
  report.range += " reduced squares, " +
                  std::to_string(report.instances_tested * Factorial(n)) +
                  " squares of order " + std::to_string(n);
  return report;
}

RotaResult RotaScrambledSearch(const Matroid& matroid,
                               const std::vector<std::vector<int>>& parts) {
  const int n = static_cast<int>(parts.size());
  const int ground = matroid.ground_size();
  if (ground != n * n) {
    throw HypothesisError("ground has " + std::to_string(ground) + " elements, expected " +
                              std::to_string(n * n),
                          {});
  }
  std::vector<int> part_of(ground, -1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(parts[i].size()) != n) {
      throw HypothesisError("part " + std::to_string(i) + " does not have " +
                                std::to_string(n) + " elements",
                            {i});
    }
    for (int x : parts[i]) {
      if (x < 0 || x >= ground) throw InputError("part element outside the ground");
      if (part_of[x] >= 0) throw InputError("parts overlap at " + std::to_string(x));
      part_of[x] = i;
    }
  }
  const int rho = CoveringNumber(matroid).size;
  if (rho != n) {
    throw HypothesisError("covering number is " + std::to_string(rho) + ", expected " +
                              std::to_string(n),
                          {});
  }
  RotaResult result;
  result.cover = CoveringNumber(ground, [&](const Subset& set) {
    std::uint32_t seen = 0;
    for (int x : set) {
      const std::uint32_t bit = 1u << part_of[x];
      if (seen & bit) return false;
      seen |= bit;
    }
    return matroid.IsIndependent(set);
  });
  result.within_n_plus_one = result.cover.size <= n + 1;
  result.within_n = result.cover.size <= n;
  result.conjecture_holds = result.within_n_plus_one && (n % 2 == 1 || result.within_n);
  return result;
}

std::optional<RainbowCycle> RainbowShortCycle(const Graph& graph,
                                              const std::vector<std::vector<int>>& classes,
                                              int r, bool conjecture_mode) {
  const int n = graph.num_vertices();
  if (n > 64) throw InputError("at most 64 vertices");
  std::vector<int> class_of(graph.num_edges(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int e : classes[c]) {
      if (!graph.HasEdge(e)) throw InputError("unknown edge " + std::to_string(e));
      if (class_of[e] >= 0) {
        throw InputError("edge " + std::to_string(e) + " lies in two classes");
      }
      class_of[e] = static_cast<int>(c);
    }
  }
  if (conjecture_mode) {
    if (static_cast<int>(classes.size()) != n) {
      throw HypothesisError("expected " + std::to_string(n) + " classes", {});
    }
    const int need = r > 0 ? (n + r - 1) / r : n;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (static_cast<int>(classes[c].size()) < need) {
        throw HypothesisError("class " + std::to_string(c) + " has fewer than " +
                                  std::to_string(need) + " edges",
                              {static_cast<int>(c)});
      }
    }
  }
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (class_of[e] < 0) continue;
    incident[graph.edge(e).u].push_back(e);
    incident[graph.edge(e).v].push_back(e);
  }
  std::vector<int> path;
  std::vector<bool> color_used(classes.size(), false);
  int length = 0;
  int start = 0;
  auto search = [&](auto&& self, int u, std::uint64_t visited) -> bool {
    const int depth = static_cast<int>(path.size());
    for (int e : incident[u]) {
      const int c = class_of[e];
      if (color_used[c]) continue;
      const int w = graph.edge(e).Other(u);
      if (w == start) {
        if (depth + 1 != length) continue;
        path.push_back(e);
        return true;
      }
      if (depth + 1 >= length || w < start || ((visited >> w) & 1)) continue;
      color_used[c] = true;
      path.push_back(e);
      if (self(self, w, visited | (std::uint64_t{1} << w))) return true;
      path.pop_back();
      color_used[c] = false;
    }
    return false;
  };
  for (length = 2; length <= r; ++length) {
    for (start = 0; start < n; ++start) {
      path.clear();
      std::fill(color_used.begin(), color_used.end(), false);
      if (search(search, start, std::uint64_t{1} << start)) {
        RainbowCycle cycle;
        cycle.edges = path;
        for (int e : path) cycle.colors.push_back(class_of[e]);
        return cycle;
      }
    }
  }
  return std::nullopt;
}

Matroid RandomMatroid(int ground, Rng& rng) {
  if (ground < 1) throw InputError("ground must be nonempty");
  auto base = [&](int kind) -> Matroid {
    switch (kind) {
      case 0:
        return Matroid::Uniform(ground, rng.Between(1, ground));
      case 1: {
        const int count = rng.Between(1, ground);
        std::vector<std::vector<int>> parts(count);
        for (int x = 0; x < ground; ++x) parts[rng.Below(count)].push_back(x);
        std::vector<int> caps;
        for (const auto& part : parts) {
          caps.push_back(part.empty() ? 0 : rng.Between(1, static_cast<int>(part.size())));
        }
        return Matroid::Partition(ground, std::move(parts), std::move(caps));
      }
      case 2: {
        const int vertices = rng.Between(2, 5);
        std::vector<Edge> edges;
        for (int x = 0; x < ground; ++x) {
          const int u = rng.Below(vertices);
          int v = rng.Below(vertices - 1);
          if (v >= u) ++v;
          edges.push_back({u, v});
        }
        return Matroid::Graphic(Graph(vertices, std::move(edges)));
      }
      default: {
        const int rows = rng.Between(1, 4);
        std::vector<std::uint64_t> columns;
        for (int x = 0; x < ground; ++x) {
          columns.push_back(1 + rng.Below((1 << rows) - 1));
        }
        return Matroid::Binary(BinaryMatrix(rows, std::move(columns)));
      }
    }
  };
  const int kind = rng.Below(5);
  if (kind < 4) return base(kind);
  const Matroid inner = base(rng.Below(4));
  const int rank = Rank(inner, Subset::Range(ground));
  return Matroid::Truncate(inner, rng.Between(1, rank));
}

SweepReport RunConjectureSweep(const SweepSpec& spec, const RecordSink& sink) {
  spec.Validate();
  const std::string& tag = spec.conjecture;
  if (tag == "drisko") return DriskoSweep(spec, sink, false);
  if (tag == "stairs") return DriskoSweep(spec, sink, true);
  if (tag == "repeats") return RepeatsSweep(spec, sink);
  if (tag == "arrow") {
    ArrowStatement statement;
    statement.a = spec.Int("a", 2);
    statement.b = spec.Int("b", 2);
    statement.c = spec.Int("c", 1);
    const std::string cls = spec.Str("class", "bipartite");
    if (cls != "bipartite" && cls != "general") {
      throw InputError("class must be bipartite or general");
    }
    statement.graph_class =
        cls == "general" ? GraphClass::kGeneral : GraphClass::kBipartite;
    return CounterexampleSearch(SequenceOf(statement), statement.graph_class, spec,
                                sink);
  }
  if (tag == "sequence") {
    SizeSequence sequence;
    sequence.sizes = spec.IntList("sizes", {1, 2, 2});
    sequence.target = spec.Int("n", 2);
    const std::string cls = spec.Str("class", "bipartite");
    return CounterexampleSearch(
        sequence, cls == "general" ? GraphClass::kGeneral : GraphClass::kBipartite,
        spec, sink);
  }
  if (tag == "brs") return CheckBrs(spec.Int("n", 3), spec, sink);
  if (tag == "rota") return RotaSweep(spec, sink);
  if (tag == "weighted-drisko") return WeightedDriskoSweep(spec, sink);
  if (tag == "short-cycle") return ShortCycleSweep(spec, sink);
  if (tag == "scrambled-sharpness") return ScrambledSharpnessSweep(spec, sink);
  if (tag == "two-cover") return TwoCoverSweep(spec, sink);
  throw InputError("unknown conjecture tag '" + tag + "'");
}

}  // namespace rainbow
