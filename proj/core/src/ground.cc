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

#include "rainbow/ground.h"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/errors.h"

namespace rainbow {

GroundSet::GroundSet(int size) : size_(size) {
  if (size < 0) throw InputError("ground set size must be nonnegative");
}

ColoredFamily::ColoredFamily(int ground_size, std::vector<std::vector<int>> sets)
    : ground_(ground_size), sets_(std::move(sets)) {
  for (size_t color = 0; color < sets_.size(); ++color) {
    auto& s = sets_[color];
    for (int e : s) {
      if (!ground_.Contains(e)) {
        throw InputError("color " + std::to_string(color) + ": element " +
                         std::to_string(e) + " outside ground set of size " +
                         std::to_string(ground_size));
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

bool ColoredFamily::Contains(int color, int element) const {
  if (color < 0 || color >= num_colors()) return false;
  const auto& s = sets_[color];
  return std::binary_search(s.begin(), s.end(), element);
}

ColoredFamily ColoredFamily::Restrict(std::span<const int> colors) const {
  std::vector<std::vector<int>> sub;
  sub.reserve(colors.size());
  for (int c : colors) sub.push_back(set(c));
  return ColoredFamily(ground_size(), std::move(sub));
}

std::optional<int> ChoiceFunction::At(int color) const {
  auto it = assignments_.find(color);
  if (it == assignments_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ChoiceFunction::Domain() const {
  std::vector<int> out;
  for (const auto& [color, element] : assignments_) out.push_back(color);
  return out;
}

std::vector<int> ChoiceFunction::Image() const {
  std::vector<int> out;
  for (const auto& [color, element] : assignments_) out.push_back(element);
  std::sort(out.begin(), out.end());
  return out;
}

bool ChoiceFunction::IsInjective() const {
  const std::vector<int> image = Image();
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

bool ChoiceFunction::IsFull(int num_colors) const {
  if (size() != num_colors) return false;
  for (const auto& [color, element] : assignments_) {
    if (color < 0 || color >= num_colors) return false;
  }
  return true;
}

std::vector<int> FamilyUnion(const ColoredFamily& family,
                             std::span<const int> colors) {
  std::vector<int> out;
  for (int c : colors) {
    if (c < 0 || c >= family.num_colors()) {
      throw InputError("color index " + std::to_string(c) + " out of range");
    }
    const auto& s = family.set(c);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsRainbow(const ColoredFamily& family, const ChoiceFunction& choice) {
  for (const auto& [color, element] : choice.assignments()) {
    if (!family.Contains(color, element)) return false;
  }
  return choice.IsInjective();
}

void ValidateScrambling(std::span<const std::vector<int>> original,
                        std::span<const std::vector<int>> scrambled, int n) {
  std::multiset<int> lhs;
  std::multiset<int> rhs;
  for (const auto& s : original) lhs.insert(s.begin(), s.end());
  for (size_t i = 0; i < scrambled.size(); ++i) {
    const auto& s = scrambled[i];
    if (static_cast<int>(s.size()) > n) {
      throw InputError("scrambling class " + std::to_string(i) + " has " +
                       std::to_string(s.size()) + " members, more than n=" +
                       std::to_string(n));
    }
    std::set<int> distinct(s.begin(), s.end());
    if (distinct.size() != s.size()) {
      throw InputError("scrambling class " + std::to_string(i) +
                       " repeats a member");
    }
    rhs.insert(s.begin(), s.end());
  }
  if (lhs != rhs) {
    for (int id : lhs) {
      if (lhs.count(id) != rhs.count(id)) {
        throw InputError("scrambling multiset mismatch at id " +
                         std::to_string(id) + ": " +
                         std::to_string(lhs.count(id)) + " in family, " +
                         std::to_string(rhs.count(id)) + " in scrambling");
      }
    }
    for (int id : rhs) {
      if (lhs.count(id) != rhs.count(id)) {
        throw InputError("scrambling multiset mismatch at id " +
                         std::to_string(id) + ": " +
                         std::to_string(lhs.count(id)) + " in family, " +
                         std::to_string(rhs.count(id)) + " in scrambling");
      }
    }
  }
}

}  // namespace rainbow
