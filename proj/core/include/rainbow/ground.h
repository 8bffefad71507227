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

#ifndef RAINBOW_GROUND_H_
#define RAINBOW_GROUND_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

// Elements are dense ids 0..size-1.
class GroundSet {
 public:
  explicit GroundSet(int size);

  int size() const { return size_; }
  bool Contains(int element) const { return element >= 0 && element < size_; }

 private:
  int size_;
};

// An indexed multiset of subsets of a ground set. The index of a set is its
// color; the same subset may appear under several colors.
class ColoredFamily {
 public:
  // Member sets are sorted and deduplicated. Throws InputError when an
  // element lies outside the ground set.
  ColoredFamily(int ground_size, std::vector<std::vector<int>> sets);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  int num_colors() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& set(int color) const { return sets_.at(color); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  bool Contains(int color, int element) const;

  // The subfamily indexed by `colors`, recolored 0..|colors|-1 in order.
  ColoredFamily Restrict(std::span<const int> colors) const;

 private:
  GroundSet ground_;
  std::vector<std::vector<int>> sets_;
};

// A partial map color -> element, i.e. a rainbow set together with where
// each representative came from.
class ChoiceFunction {
 public:
  void Assign(int color, int element) { assignments_[color] = element; }
  void Unassign(int color) { assignments_.erase(color); }

  std::optional<int> At(int color) const;
  bool Covers(int color) const { return assignments_.count(color) > 0; }

  const std::map<int, int>& assignments() const { return assignments_; }
  int size() const { return static_cast<int>(assignments_.size()); }
  bool empty() const { return assignments_.empty(); }

  // Assigned colors, ascending.
  std::vector<int> Domain() const;
  // Assigned elements, sorted (with repeats if the map is not injective).
  std::vector<int> Image() const;

  bool IsInjective() const;
  bool IsFull(int num_colors) const;

  friend bool operator==(const ChoiceFunction&, const ChoiceFunction&) =
      default;

 private:
  std::map<int, int> assignments_;
};

// Union of the sets indexed by `colors`, sorted. Throws InputError on an
// out-of-range color.
std::vector<int> FamilyUnion(const ColoredFamily& family,
                             std::span<const int> colors);

// Membership and injectivity of `choice` against `family`. Colors outside
// the family make the answer false rather than throwing.
bool IsRainbow(const ColoredFamily& family, const ChoiceFunction& choice);

// Checks that `scrambled` is an n-scrambling of `original`: the two families
// have equal multiset unions and every scrambled class has at most `n`
// members. Throws InputError naming the first discrepancy.
void ValidateScrambling(std::span<const std::vector<int>> original,
                        std::span<const std::vector<int>> scrambled, int n);

}  // namespace rainbow

#endif  // RAINBOW_GROUND_H_
