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

#include "rainbow/coercive_search.h"

#include <algorithm>
#include <string>

#include "rainbow/errors.h"
#include "rainbow/io.h"

namespace rainbow {
namespace {

// All matchings of exactly `size` edges among `edges`, as index lists.
std::vector<std::vector<int>> MatchingsOfSize(const std::vector<Edge>& edges,
                                              int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::uint64_t used = 0;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      const std::uint64_t mask =
          (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
      if (used & mask) continue;
      used |= mask;
      current.push_back(static_cast<int>(i));
      self(self, i + 1);
      current.pop_back();
      used &= ~mask;
    }
  };
  extend(extend, 0);
  return out;
}

// A family instance: host edges plus one edge-index list per color.
struct Candidate {
  int num_vertices = 0;
  const std::vector<Edge>* host = nullptr;
  std::vector<std::vector<int>> colors;
  bool shared_edges = true;
};

EdgeFamily Materialize(const Candidate& c) {
  if (c.shared_edges) {
    return EdgeFamily(Graph(c.num_vertices, *c.host), c.colors);
  }
  std::vector<Edge> edges;
  std::vector<std::vector<int>> colors;
  for (const auto& ids : c.colors) {
    colors.emplace_back();
    for (int i : ids) {
      colors.back().push_back(static_cast<int>(edges.size()));
      edges.push_back((*c.host)[i]);
    }
  }
  return EdgeFamily(Graph(c.num_vertices, std::move(edges)), std::move(colors));
}

SweepRecord Evaluate(const EdgeFamily& family, int target) {
  SweepRecord record;
  RainbowMatching best = MaxRainbowMatching(family, target);
  record.counterexample = best.size() < target;
  record.instance = ToJson(family);
  record.witness = {{"max_rainbow_matching", best.size()},
                    {"matching", ToJson(best)}};
  return record;
}

// Odometer over colors: options[c] choices per color, nondecreasing within
// runs of equal `group`, color 0 optionally pinned to option 0.
class MultisetOdometer {
 public:
  MultisetOdometer(std::vector<int> options, std::vector<int> group, bool pin_first)
      : options_(std::move(options)), group_(std::move(group)),
        pin_first_(pin_first), state_(options_.size(), 0) {
    for (int o : options_) done_ = done_ || o == 0;
  }

  bool done() const { return done_; }
  const std::vector<int>& state() const { return state_; }

  void Advance() {
    for (int c = static_cast<int>(state_.size()) - 1; c >= 0; --c) {
      if (c == 0 && pin_first_) break;
      if (state_[c] + 1 < options_[c]) {
        ++state_[c];
        for (std::size_t d = c + 1; d < state_.size(); ++d) {
          state_[d] = group_[d] == group_[d - 1] ? state_[d - 1] : 0;
        }
        return;
      }
    }
    done_ = true;
  }

 private:
  std::vector<int> options_;
  std::vector<int> group_;
  bool pin_first_;
  std::vector<int> state_;
  bool done_ = false;
};

std::vector<int> Groups(const std::vector<int>& sizes) {
  std::vector<int> group(sizes.size());
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    group[i] = group[i - 1] + (sizes[i] != sizes[i - 1]);
  }
  return group;
}

// Appends every family of matchings inside `host` to `out`, stopping once
// `out` holds `limit` candidates. Returns the number of families in full.
std::int64_t EnumerateFamilies(int num_vertices, const std::vector<Edge>& host,
                               const std::vector<int>& sizes, bool pin_first,
                               bool shared_edges, std::size_t limit,
                               std::vector<Candidate>& out) {
  std::vector<std::vector<std::vector<int>>> by_color;
  std::vector<int> options;
  for (int s : sizes) {
    by_color.push_back(MatchingsOfSize(host, s));
    options.push_back(static_cast<int>(by_color.back().size()));
  }
  std::int64_t total = 0;
  for (MultisetOdometer odo(options, Groups(sizes), pin_first); !odo.done();
       odo.Advance()) {
    ++total;
    if (out.size() >= limit) continue;
    Candidate c;
    c.num_vertices = num_vertices;
    c.host = &host;
    c.shared_edges = shared_edges;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      c.colors.push_back(by_color[i][odo.state()[i]]);
    }
    out.push_back(std::move(c));
  }
  return total;
}

struct Component {
  bool cycle = false;
  int length = 0;  // vertices
};

void HostShapes(int budget, int min_cycle, bool even_only, bool single,
                std::vector<Component>& current,
                std::vector<std::vector<Component>>& out) {
  if (!current.empty()) out.push_back(current);
  if (single) {
    if (!current.empty()) return;
    for (int len = min_cycle; len <= budget; ++len) {
      if (even_only && len % 2) continue;
      out.push_back({{true, len}});
    }
    return;
  }
  // Components in nonincreasing (cycle, length) order to avoid repeats.
  for (int cyc = 1; cyc >= 0; --cyc) {
    for (int len = budget; len >= 2; --len) {
      const Component next{cyc == 1, len};
      if (next.cycle && (len < min_cycle || (even_only && len % 2))) continue;
      if (!current.empty()) {
        const Component& last = current.back();
        if (std::pair(next.cycle, next.length) > std::pair(last.cycle, last.length)) {
          continue;
        }
      }
      current.push_back(next);
      HostShapes(budget - len, min_cycle, even_only, false, current, out);
      current.pop_back();
    }
  }
}

std::vector<Edge> BuildHost(const std::vector<Component>& shape, int& vertices) {
  std::vector<Edge> edges;
  vertices = 0;
  for (const Component& c : shape) {
    for (int i = 0; i + 1 < c.length; ++i) {
      edges.push_back({vertices + i, vertices + i + 1});
    }
    if (c.cycle) edges.push_back({vertices, vertices + c.length - 1});
    vertices += c.length;
  }
  return edges;
}

}  // namespace

SizeSequence SequenceOf(const ArrowStatement& statement) {
  SizeSequence seq;
  seq.sizes.assign(statement.a, statement.b);
  seq.target = statement.c;
  return seq;
}

EdgeFamily RandomBipartiteMatchings(const std::vector<int>& sizes, int side,
                                    Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> colors;
  std::vector<int> sides(2 * side, 0);
  std::fill(sides.begin() + side, sides.end(), 1);
  for (int s : sizes) {
    if (s > side) throw InputError("matching size exceeds the side length");
    const std::vector<int> perm = rng.Permutation(side);
    colors.emplace_back();
    for (int row : rng.Sample(side, s)) {
      colors.back().push_back(static_cast<int>(edges.size()));
      edges.push_back({row, side + perm[row]});
    }
  }
  return EdgeFamily(Graph(2 * side, std::move(edges), std::move(sides)),
                    std::move(colors));
}

SweepReport CounterexampleSearch(const SizeSequence& sequence, GraphClass graph_class,
                                 const SweepSpec& spec, const RecordSink& sink) {
  sequence.Validate();
  spec.Validate();
  const int target = sequence.target;
  const auto& sizes = sequence.sizes;
  const int largest = sizes.empty() ? 0 : sizes.back();

  if (spec.mode == SweepMode::kRandom) {
    if (graph_class != GraphClass::kBipartite) {
      throw InputError("random counterexample search samples bipartite graphs");
    }
    const int side = spec.Int("side", std::max(largest, target));
    return RunSweep(
        spec, -1,
        [&](std::int64_t index) {
          Rng rng(spec.seed, static_cast<std::uint64_t>(index));
          return Evaluate(RandomBipartiteMatchings(sizes, side, rng), target);
        },
        sink);
  }

  std::vector<Candidate> candidates;
  const std::size_t limit = static_cast<std::size_t>(spec.instance_cap);
  std::int64_t total = 0;
  std::vector<std::vector<Edge>> hosts;
  std::vector<int> host_vertices;

  if (spec.mode == SweepMode::kExhaustive) {
    const int vertices = spec.Int("vertices", 2 * std::max(largest, target));
    if (vertices > 64) throw InputError("at most 64 vertices");
    std::vector<Edge> host;
    if (graph_class == GraphClass::kBipartite) {
      const int side = vertices / 2;
      for (int u = 0; u < side; ++u) {
        for (int v = side; v < 2 * side; ++v) host.push_back({u, v});
      }
      host_vertices.push_back(2 * side);
    } else {
      for (int u = 0; u < vertices; ++u) {
        for (int v = u + 1; v < vertices; ++v) host.push_back({u, v});
      }
      host_vertices.push_back(vertices);
    }
    hosts.push_back(std::move(host));
    // The first matching's edges are canonical up to relabeling: the
    // matchings are listed lexicographically and the first uses the lowest
    // vertices, so pinning it loses nothing.
    total = EnumerateFamilies(host_vertices[0], hosts[0], sizes, true, false, limit,
                              candidates);
  } else {
    const int vertices = spec.Int("vertices", 8);
    const bool single = spec.Str("hosts", "all") == "single";
    const bool bipartite = graph_class == GraphClass::kBipartite;
    std::vector<std::vector<Component>> shapes;
    std::vector<Component> scratch;
    HostShapes(vertices, bipartite ? 4 : 3, bipartite, single, scratch, shapes);
    hosts.reserve(shapes.size());
    for (const auto& shape : shapes) {
      int n = 0;
      hosts.push_back(BuildHost(shape, n));
      host_vertices.push_back(n);
    }
    for (std::size_t h = 0; h < hosts.size(); ++h) {
      total += EnumerateFamilies(host_vertices[h], hosts[h], sizes, false, true,
                                 limit, candidates);
    }
  }

  return RunSweep(
      spec, total,
      [&](std::int64_t index) {
        return Evaluate(Materialize(candidates.at(index)), target);
      },
      sink);
}

}  // namespace rainbow
