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

#include "rainbow/network.h"

#include <algorithm>
#include <string>

#include "rainbow/errors.h"

namespace rainbow {

Network::Network(int num_vertices, std::vector<Arc> arcs,
                 std::vector<int> sources, std::vector<int> targets)
    : num_vertices_(num_vertices),
      arcs_(std::move(arcs)),
      sources_(std::move(sources)),
      targets_(std::move(targets)),
      role_(num_vertices < 0 ? 0 : num_vertices, kInner) {
  if (num_vertices < 0) throw InputError("vertex count must be nonnegative");
  std::sort(sources_.begin(), sources_.end());
  std::sort(targets_.begin(), targets_.end());
  for (int s : sources_) {
    if (s < 0 || s >= num_vertices) throw InputError("source out of range");
    if (role_[s] == kSource) throw InputError("source listed twice");
    role_[s] = kSource;
  }
  for (int t : targets_) {
    if (t < 0 || t >= num_vertices) throw InputError("target out of range");
    if (role_[t] == kSource) {
      throw InputError("network invariant: sources and targets must be disjoint (vertex " +
                       std::to_string(t) + ")");
    }
    if (role_[t] == kTarget) throw InputError("target listed twice");
    role_[t] = kTarget;
  }
  for (size_t id = 0; id < arcs_.size(); ++id) {
    const Arc& a = arcs_[id];
    if (a.tail < 0 || a.tail >= num_vertices || a.head < 0 ||
        a.head >= num_vertices) {
      throw InputError("arc " + std::to_string(id) + " has an endpoint out of range");
    }
    if (a.tail == a.head) {
      throw InputError("arc " + std::to_string(id) + " is a self-loop");
    }
    if (role_[a.head] == kSource) {
      throw InputError("network invariant: arc " + std::to_string(id) +
                       " enters source " + std::to_string(a.head));
    }
    if (role_[a.tail] == kTarget) {
      throw InputError("network invariant: arc " + std::to_string(id) +
                       " leaves target " + std::to_string(a.tail));
    }
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (role_[v] == kInner) inner_.push_back(v);
  }
}

int Network::SingleSource() const {
  if (sources_.size() != 1) throw InputError("expected exactly one source");
  return sources_.front();
}

int Network::SingleTarget() const {
  if (targets_.size() != 1) throw InputError("expected exactly one target");
  return targets_.front();
}

WeightMap::WeightMap(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw InputError("weight of arc " + std::to_string(i) + " is negative");
    }
  }
}

std::int64_t WeightMap::Total(std::span<const int> arcs) const {
  std::int64_t total = 0;
  for (int a : arcs) total += weights_.at(a);
  return total;
}

void ValidatePath(const Network& network, std::span<const int> arcs, int from,
                  int to) {
  if (arcs.empty()) throw InputError("path has no arcs");
  std::vector<char> seen(network.num_vertices(), 0);
  int at = from;
  seen[at] = 1;
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (!network.HasArc(arcs[i])) {
      throw InputError("path uses unknown arc " + std::to_string(arcs[i]));
    }
    const Arc& a = network.arc(arcs[i]);
    if (a.tail != at) {
      throw InputError("path arc " + std::to_string(arcs[i]) +
                       " does not continue from vertex " + std::to_string(at));
    }
    at = a.head;
    if (seen[at]) {
      throw InputError("path revisits vertex " + std::to_string(at));
    }
    seen[at] = 1;
  }
  if (at != to) {
    throw InputError("path ends at " + std::to_string(at) + " instead of " +
                     std::to_string(to));
  }
}

}  // namespace rainbow
