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

#ifndef RAINBOW_NETWORK_H_
#define RAINBOW_NETWORK_H_

#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

struct Arc {
  int tail = 0;
  int head = 0;
};

// A digraph with disjoint source and target sets. No arc enters a source and
// no arc leaves a target. Parallel arcs are allowed and identified by index.
class Network {
 public:
  Network() = default;
  // Throws InputError when an invariant fails, naming it.
  Network(int num_vertices, std::vector<Arc> arcs, std::vector<int> sources,
          std::vector<int> targets);

  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int id) const { return arcs_.at(id); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& sources() const { return sources_; }
  const std::vector<int>& targets() const { return targets_; }
  // V minus (S union T), ascending.
  const std::vector<int>& inner_vertices() const { return inner_; }
  int num_inner() const { return static_cast<int>(inner_.size()); }

  bool IsSource(int v) const { return role_.at(v) == kSource; }
  bool IsTarget(int v) const { return role_.at(v) == kTarget; }
  bool IsInner(int v) const { return role_.at(v) == kInner; }

  // The unique source / target. Throws InputError if there is not exactly
  // one.
  int SingleSource() const;
  int SingleTarget() const;

  bool HasArc(int id) const { return id >= 0 && id < num_arcs(); }

 private:
  enum Role : std::uint8_t { kInner, kSource, kTarget };

  int num_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> sources_;
  std::vector<int> targets_;
  std::vector<int> inner_;
  std::vector<Role> role_;
};

// Nonnegative integer arc weights, indexed by arc id.
class WeightMap {
 public:
  WeightMap() = default;
  // Throws InputError on a negative weight.
  explicit WeightMap(std::vector<std::int64_t> weights);

  std::int64_t operator[](int arc) const { return weights_.at(arc); }
  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::int64_t>& values() const { return weights_; }

  std::int64_t Total(std::span<const int> arcs) const;

 private:
  std::vector<std::int64_t> weights_;
};

// Checks that `arcs` is a directed path from `from` to `to` without repeated
// vertices. Throws InputError describing the defect otherwise.
void ValidatePath(const Network& network, std::span<const int> arcs, int from,
                  int to);

}  // namespace rainbow

#endif  // RAINBOW_NETWORK_H_
