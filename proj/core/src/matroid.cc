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

#include "rainbow/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

#include "rainbow/errors.h"

namespace rainbow {

struct Matroid::Impl {
  int ground_size = 0;
  MatroidDescriptor descriptor;
  // Partition matroids: part index per element, -1 when unconstrained.
  std::vector<int> part_of;
};

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool LinearlyIndependent(const std::vector<std::uint64_t>& columns,
                         const Subset& set) {
  std::uint64_t basis[64] = {};
  for (int j : set) {
    std::uint64_t v = columns[j];
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        break;
      }
      v ^= basis[top];
    }
    if (v == 0) return false;
  }
  return true;
}

void CheckGround(const Subset& set, int ground_size) {
  if (!set.Empty() && set.NextAfter(ground_size - 1) != Subset::kCapacity) {
    throw InputError("subset has an element outside the ground set");
  }
}

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, std::vector<std::uint64_t> columns)
    : rows_(rows), columns_(std::move(columns)) {
  if (rows < 0 || rows > 64) {
    throw InputError("binary matrices support 0..64 rows");
  }
  const std::uint64_t mask = rows == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << rows) - 1;
  for (size_t j = 0; j < columns_.size(); ++j) {
    if ((columns_[j] & ~mask) != 0) {
      throw InputError("column " + std::to_string(j) +
                       " has bits beyond the row count");
    }
  }
}

BinaryMatrix BinaryMatrix::FromRows(const std::vector<std::vector<int>>& bit_rows) {
  const int rows = static_cast<int>(bit_rows.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(bit_rows[0].size());
  std::vector<std::uint64_t> columns(cols, 0);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(bit_rows[i].size()) != cols) {
      throw InputError("dimension mismatch: row " + std::to_string(i) +
                       " has " + std::to_string(bit_rows[i].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (int j = 0; j < cols; ++j) {
      const int bit = bit_rows[i][j];
      if (bit != 0 && bit != 1) throw InputError("matrix entries must be 0 or 1");
      if (bit) columns[j] |= std::uint64_t{1} << i;
    }
  }
  return BinaryMatrix(rows, std::move(columns));
}

std::vector<std::vector<int>> BinaryMatrix::ToRows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols(), 0));
  for (int j = 0; j < cols(); ++j) {
    for (int i = 0; i < rows_; ++i) out[i][j] = (columns_[j] >> i) & 1;
  }
  return out;
}

Matroid Matroid::Partition(int ground_size, std::vector<std::vector<int>> parts,
                           std::vector<int> caps) {
  if (parts.size() != caps.size()) {
    throw InputError("partition matroid needs one capacity per part");
  }
  auto impl = std::make_shared<Impl>();
  impl->ground_size = ground_size;
  impl->part_of.assign(ground_size, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (caps[p] < 0) throw InputError("partition capacities must be nonnegative");
    for (int e : parts[p]) {
      if (e < 0 || e >= ground_size) {
        throw InputError("partition part " + std::to_string(p) +
                         " has an element outside the ground set");
      }
      if (impl->part_of[e] >= 0) {
        throw InputError("overlapping parts: element " + std::to_string(e) +
                         " is in parts " + std::to_string(impl->part_of[e]) +
                         " and " + std::to_string(p));
      }
      impl->part_of[e] = static_cast<int>(p);
    }
  }
  impl->descriptor = PartitionDescriptor{std::move(parts), std::move(caps)};
  return Matroid(std::move(impl));
}

Matroid Matroid::Uniform(int ground_size, int k) {
  if (ground_size < 0 || ground_size > Subset::kCapacity) {
    throw InputError("ground size out of supported range");
  }
  if (k < 0) throw InputError("uniform matroid rank must be nonnegative");
  auto impl = std::make_shared<Impl>();
  impl->ground_size = ground_size;
  impl->descriptor = UniformDescriptor{k};
  return Matroid(std::move(impl));
}

Matroid Matroid::Graphic(Graph graph) {
  auto impl = std::make_shared<Impl>();
  impl->ground_size = graph.num_edges();
  impl->descriptor = GraphicDescriptor{std::move(graph)};
  return Matroid(std::move(impl));
}

Matroid Matroid::Binary(BinaryMatrix matrix) {
  auto impl = std::make_shared<Impl>();
  impl->ground_size = matrix.cols();
  impl->descriptor = BinaryDescriptor{std::move(matrix)};
  return Matroid(std::move(impl));
}

Matroid Matroid::Truncate(const Matroid& base, int k) {
  if (k < 0) throw InputError("truncation rank must be nonnegative");
  auto impl = std::make_shared<Impl>();
  impl->ground_size = base.ground_size();
  impl->descriptor = TruncationDescriptor{std::make_shared<Matroid>(base), k};
  return Matroid(std::move(impl));
}

Matroid Matroid::DirectSum(const Matroid& first, const Matroid& second) {
  auto impl = std::make_shared<Impl>();
  impl->ground_size = first.ground_size() + second.ground_size();
  if (impl->ground_size > Subset::kCapacity) {
    throw InputError("direct sum exceeds the supported ground size");
  }
  impl->descriptor = DirectSumDescriptor{std::make_shared<Matroid>(first),
                                         std::make_shared<Matroid>(second)};
  return Matroid(std::move(impl));
}

Matroid Matroid::Lift(const Matroid& base, std::vector<int> element_of) {
  if (static_cast<int>(element_of.size()) > Subset::kCapacity) {
    throw InputError("lifted ground exceeds the supported size");
  }
  for (int e : element_of) {
    if (e < 0 || e >= base.ground_size()) {
      throw InputError("lifted copy refers to an element outside the base ground set");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->ground_size = static_cast<int>(element_of.size());
  impl->descriptor =
      LiftDescriptor{std::make_shared<Matroid>(base), std::move(element_of)};
  return Matroid(std::move(impl));
}

int Matroid::ground_size() const { return impl_->ground_size; }

const MatroidDescriptor& Matroid::descriptor() const { return impl_->descriptor; }

std::string_view Matroid::kind() const {
  return std::visit(
      Overloaded{
          [](const PartitionDescriptor&) { return std::string_view("partition"); },
          [](const UniformDescriptor&) { return std::string_view("uniform"); },
          [](const GraphicDescriptor&) { return std::string_view("graphic"); },
          [](const BinaryDescriptor&) { return std::string_view("binary"); },
          [](const TruncationDescriptor&) { return std::string_view("truncation"); },
          [](const DirectSumDescriptor&) { return std::string_view("direct-sum"); },
          [](const LiftDescriptor&) { return std::string_view("lift"); },
      },
      impl_->descriptor);
}

bool Matroid::IsIndependent(const Subset& set) const {
  CheckGround(set, impl_->ground_size);
  return std::visit(
      Overloaded{
          [&](const PartitionDescriptor& d) {
            std::vector<int> used(d.caps.size(), 0);
            for (int e : set) {
              const int p = impl_->part_of[e];
              if (p >= 0 && ++used[p] > d.caps[p]) return false;
            }
            return true;
          },
          [&](const UniformDescriptor& d) { return set.Size() <= d.k; },
          [&](const GraphicDescriptor& d) {
            std::vector<int> parent(d.graph.num_vertices());
            std::iota(parent.begin(), parent.end(), 0);
            for (int id : set) {
              const Edge& e = d.graph.edge(id);
              const int a = Find(parent, e.u);
              const int b = Find(parent, e.v);
              if (a == b) return false;
              parent[a] = b;
            }
            return true;
          },
          [&](const BinaryDescriptor& d) {
            return LinearlyIndependent(d.matrix.columns(), set);
          },
          [&](const TruncationDescriptor& d) {
            return set.Size() <= d.k && d.base->IsIndependent(set);
          },
          [&](const DirectSumDescriptor& d) {
            const int split = d.first->ground_size();
            Subset left, right;
            for (int e : set) {
              if (e < split) {
                left.Insert(e);
              } else {
                right.Insert(e - split);
              }
            }
            return d.first->IsIndependent(left) && d.second->IsIndependent(right);
          },
          [&](const LiftDescriptor& d) {
            Subset image;
            for (int c : set) {
              const int e = d.element_of[c];
              if (image.Contains(e)) return false;
              image.Insert(e);
            }
            return d.base->IsIndependent(image);
          },
      },
      impl_->descriptor);
}

Subset GreedyBasis(const Matroid& matroid, const Subset& set) {
  Subset basis;
  for (int e : set) {
    Subset candidate = basis.With(e);
    if (matroid.IsIndependent(candidate)) basis = candidate;
  }
  return basis;
}

int Rank(const Matroid& matroid, const Subset& set) {
  return GreedyBasis(matroid, set).Size();
}

bool InSpan(const Matroid& matroid, const Subset& set, int x) {
  if (set.Contains(x)) return true;
  const Subset basis = GreedyBasis(matroid, set);
  return !matroid.IsIndependent(basis.With(x));
}

IntersectionResult MatroidIntersection(const Matroid& first,
                                       const Matroid& second) {
  if (first.ground_size() != second.ground_size()) {
    throw InputError("matroid intersection needs a common ground set");
  }
  const int m = first.ground_size();
  Subset current;
  while (true) {
    std::vector<char> sink(m, 0);
    std::vector<int> parent(m, -2);  // -2 unvisited, -1 root
    std::queue<int> queue;
    for (int x = 0; x < m; ++x) {
      if (current.Contains(x)) continue;
      if (second.IsIndependent(current.With(x))) sink[x] = 1;
      if (first.IsIndependent(current.With(x))) {
        parent[x] = -1;
        queue.push(x);
      }
    }
    int end = -1;
    while (!queue.empty() && end < 0) {
      const int a = queue.front();
      queue.pop();
      if (!current.Contains(a) && sink[a]) {
        end = a;
        break;
      }
      for (int b = 0; b < m; ++b) {
        if (parent[b] != -2) continue;
        bool arc;
        if (current.Contains(a)) {
          // a in I, b outside: I - a + b independent in the first matroid.
          arc = !current.Contains(b) &&
                first.IsIndependent(current.Without(a).With(b));
        } else {
          // a outside, b in I: I - b + a independent in the second matroid.
          arc = current.Contains(b) &&
                second.IsIndependent(current.Without(b).With(a));
        }
        if (arc) {
          parent[b] = a;
          queue.push(b);
        }
      }
    }
    if (end >= 0) {
      for (int v = end; v >= 0; v = parent[v]) {
        if (current.Contains(v)) {
          current.Erase(v);
        } else {
          current.Insert(v);
        }
      }
      continue;
    }

    // No augmenting path: the elements that can still reach a sink form the
    // optimality certificate.
    std::vector<std::vector<int>> reverse(m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (current.Contains(a) && !current.Contains(b) &&
            first.IsIndependent(current.Without(a).With(b))) {
          reverse[b].push_back(a);
        } else if (!current.Contains(a) && current.Contains(b) &&
                   second.IsIndependent(current.Without(b).With(a))) {
          reverse[b].push_back(a);
        }
      }
    }
    Subset cut;
    std::queue<int> back;
    for (int x = 0; x < m; ++x) {
      if (sink[x]) {
        cut.Insert(x);
        back.push(x);
      }
    }
    while (!back.empty()) {
      const int b = back.front();
      back.pop();
      for (int a : reverse[b]) {
        if (!cut.Contains(a)) {
          cut.Insert(a);
          back.push(a);
        }
      }
    }
    return IntersectionResult{current, cut};
  }
}

namespace {

class CoverSearch {
 public:
  CoverSearch(int ground_size, std::vector<std::uint32_t> maximal)
      : full_((std::uint32_t{1} << ground_size) - 1),
        maximal_(std::move(maximal)) {
    for (std::uint32_t s : maximal_) {
      max_size_ = std::max(max_size_, std::popcount(s));
    }
  }

  std::vector<std::uint32_t> Run() {
    best_ = Greedy();
    std::vector<std::uint32_t> chosen;
    Recurse(full_, chosen);
    return best_;
  }

 private:
  std::vector<std::uint32_t> Greedy() const {
    std::vector<std::uint32_t> cover;
    std::uint32_t uncovered = full_;
    while (uncovered != 0) {
      std::uint32_t pick = 0;
      int gain = -1;
      for (std::uint32_t s : maximal_) {
        const int g = std::popcount(s & uncovered);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      cover.push_back(pick);
      uncovered &= ~pick;
    }
    return cover;
  }

  void Recurse(std::uint32_t uncovered, std::vector<std::uint32_t>& chosen) {
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const int remaining = std::popcount(uncovered);
    const int lower = static_cast<int>(chosen.size()) +
                      (remaining + max_size_ - 1) / max_size_;
    if (lower >= static_cast<int>(best_.size())) return;
    const int e = std::countr_zero(uncovered);
    std::vector<std::uint32_t> options;
    for (std::uint32_t s : maximal_) {
      if ((s >> e) & 1) options.push_back(s & uncovered);
    }
    std::sort(options.begin(), options.end(), [](std::uint32_t a, std::uint32_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a < b;
    });
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (std::uint32_t s : options) {
      chosen.push_back(s);
      Recurse(uncovered & ~s, chosen);
      chosen.pop_back();
    }
  }

  std::uint32_t full_;
  std::vector<std::uint32_t> maximal_;
  int max_size_ = 1;
  std::vector<std::uint32_t> best_;
};

Subset FromMask(std::uint32_t mask) {
  Subset s;
  for (; mask != 0; mask &= mask - 1) s.Insert(std::countr_zero(mask));
  return s;
}

}  // namespace

Cover CoveringNumber(int ground_size, const MembershipOracle& member) {
  if (ground_size > kMaxCoverGround) {
    throw CapExceeded("covering number is exact only for ground sets of at most " +
                      std::to_string(kMaxCoverGround) + " elements");
  }
  if (ground_size == 0) return Cover{};
  const std::uint32_t count = std::uint32_t{1} << ground_size;
  std::vector<char> is_member(count, 0);
  is_member[0] = 1;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    // Down-closed: a set is a member only if dropping its lowest element
    // leaves a member.
    if (!is_member[mask & (mask - 1)]) continue;
    is_member[mask] = member(FromMask(mask)) ? 1 : 0;
  }
  for (int e = 0; e < ground_size; ++e) {
    if (!is_member[std::uint32_t{1} << e]) {
      throw InputError("element " + std::to_string(e) +
                       " is a loop and cannot be covered");
    }
  }
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (!is_member[mask]) continue;
    bool is_max = true;
    for (int e = 0; e < ground_size && is_max; ++e) {
      const std::uint32_t bigger = mask | (std::uint32_t{1} << e);
      if (bigger != mask && is_member[bigger]) is_max = false;
    }
    if (is_max) maximal.push_back(mask);
  }
  CoverSearch search(ground_size, std::move(maximal));
  const std::vector<std::uint32_t> sets = search.Run();
  Cover cover;
  cover.size = static_cast<int>(sets.size());
  std::uint32_t taken = 0;
  for (std::uint32_t s : sets) {
    cover.parts.push_back(FromMask(s & ~taken));
    taken |= s;
  }
  return cover;
}

Cover CoveringNumber(const Matroid& matroid) {
  return CoveringNumber(matroid.ground_size(), [&](const Subset& s) {
    return matroid.IsIndependent(s);
  });
}

TwoCoverReport CheckTwoCover(const Matroid& first, const Matroid& second) {
  if (first.ground_size() != second.ground_size()) {
    throw InputError("two-cover check needs a common ground set");
  }
  TwoCoverReport report;
  report.first = CoveringNumber(first);
  report.second = CoveringNumber(second);
  report.intersection = CoveringNumber(first.ground_size(), [&](const Subset& s) {
    return first.IsIndependent(s) && second.IsIndependent(s);
  });
  const int worst = std::max(report.first.size, report.second.size);
  report.holds = report.intersection.size <= 2 * worst;
  report.within_plus_one = report.intersection.size <= worst + 1;
  return report;
}

}  // namespace rainbow
