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

#ifndef RAINBOW_MATROID_H_
#define RAINBOW_MATROID_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "rainbow/graph.h"
#include "rainbow/subset.h"

namespace rainbow {

// rows x cols matrix over the two-element field, stored by column. Column j
// is the representation vector of ground element j; bit i of a column is the
// entry in row i. At most 64 rows.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, std::vector<std::uint64_t> columns);
  // bit_rows[i][j] is the entry in row i, column j.
  static BinaryMatrix FromRows(const std::vector<std::vector<int>>& bit_rows);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  std::uint64_t column(int j) const { return columns_.at(j); }
  const std::vector<std::uint64_t>& columns() const { return columns_; }

  std::vector<std::vector<int>> ToRows() const;

 private:
  int rows_;
  std::vector<std::uint64_t> columns_;
};

class Matroid;

struct PartitionDescriptor {
  std::vector<std::vector<int>> parts;
  std::vector<int> caps;
};
struct UniformDescriptor {
  int k = 0;
};
struct GraphicDescriptor {
  Graph graph;
};
struct BinaryDescriptor {
  BinaryMatrix matrix;
};
struct TruncationDescriptor {
  std::shared_ptr<const Matroid> base;
  int k = 0;
};
struct DirectSumDescriptor {
  std::shared_ptr<const Matroid> first;
  std::shared_ptr<const Matroid> second;
};
// Ground element c is a copy of base element element_of[c].
struct LiftDescriptor {
  std::shared_ptr<const Matroid> base;
  std::vector<int> element_of;
};

using MatroidDescriptor =
    std::variant<PartitionDescriptor, UniformDescriptor, GraphicDescriptor,
                 BinaryDescriptor, TruncationDescriptor, DirectSumDescriptor,
                 LiftDescriptor>;

// A matroid given by its independence predicate, together with the
// construction that produced it. Copies share the underlying data.
class Matroid {
 public:
  // Independent iff |A n part_i| <= caps[i] for every part. Elements in no
  // part are unconstrained. Throws InputError on overlapping parts.
  static Matroid Partition(int ground_size, std::vector<std::vector<int>> parts,
                           std::vector<int> caps);
  // Sets of size at most k.
  static Matroid Uniform(int ground_size, int k);
  // Every subset independent.
  static Matroid Free(int ground_size) { return Uniform(ground_size, ground_size); }
  // Ground = edge ids; independent iff acyclic.
  static Matroid Graphic(Graph graph);
  // Ground = columns; independent iff linearly independent.
  static Matroid Binary(BinaryMatrix matrix);
  // Independent in `base` and of size at most k.
  static Matroid Truncate(const Matroid& base, int k);
  // Ground = first's elements, then second's shifted by first.ground_size().
  static Matroid DirectSum(const Matroid& first, const Matroid& second);
  // A set of copies is independent iff the copies name distinct base
  // elements which are independent in `base`.
  static Matroid Lift(const Matroid& base, std::vector<int> element_of);

  int ground_size() const;
  std::string_view kind() const;
  const MatroidDescriptor& descriptor() const;

  bool IsIndependent(const Subset& set) const;
  bool IsIndependent(std::span<const int> elements) const {
    return IsIndependent(Subset(elements));
  }

  struct Impl;

 private:
  explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Size of a maximal independent subset of `set`, found greedily.
int Rank(const Matroid& matroid, const Subset& set);
// The greedy maximal independent subset, scanning ascending.
Subset GreedyBasis(const Matroid& matroid, const Subset& set);
// rank(set + x) == rank(set).
bool InSpan(const Matroid& matroid, const Subset& set, int x);

// A maximum common independent set and a certificate of optimality:
// |common| == Rank(first, cut) + Rank(second, ground - cut).
struct IntersectionResult {
  Subset common;
  Subset cut;
};

// Shortest augmenting paths in the exchange graph; ties go to the smallest
// element at each breadth-first level. Throws InputError on ground mismatch.
IntersectionResult MatroidIntersection(const Matroid& first,
                                       const Matroid& second);

// Membership predicate of a complex (a down-closed set system).
using MembershipOracle = std::function<bool(const Subset&)>;

// A minimum cover of the ground set by members, reported as a partition
// (member sets are down-closed, so any cover can be made disjoint).
struct Cover {
  int size = 0;
  std::vector<Subset> parts;
};

inline constexpr int kMaxCoverGround = 16;

// Exact minimum number of members covering {0..ground_size-1}. Throws
// CapExceeded above kMaxCoverGround elements and InputError if some
// singleton is not a member.
Cover CoveringNumber(int ground_size, const MembershipOracle& member);
Cover CoveringNumber(const Matroid& matroid);

// Covering numbers of two matroids and of their intersection complex.
struct TwoCoverReport {
  Cover first;
  Cover second;
  Cover intersection;
  // rho(M n N) <= 2 max(rho(M), rho(N)); a proven bound.
  bool holds = false;
  // rho(M n N) <= max(rho(M), rho(N)) + 1; conjectured.
  bool within_plus_one = false;
};

TwoCoverReport CheckTwoCover(const Matroid& first, const Matroid& second);

}  // namespace rainbow

#endif  // RAINBOW_MATROID_H_
