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

#include "rainbow/transversal.h"

#include <algorithm>
#include <queue>

#include "rainbow/errors.h"

namespace rainbow {
namespace {

class HallMatcher {
 public:
  explicit HallMatcher(const ColoredFamily& family)
      : family_(family),
        owner_(family.ground_size(), -1),
        pick_(family.num_colors(), -1) {}

  bool Augment(int color) {
    for (int x : family_.set(color)) {
      if (visited_[x]) continue;
      visited_[x] = 1;
      if (owner_[x] < 0 || Augment(owner_[x])) {
        owner_[x] = color;
        pick_[color] = x;
        return true;
      }
    }
    return false;
  }

  bool TryColor(int color) {
    visited_.assign(family_.ground_size(), 0);
    return Augment(color);
  }

  int pick(int color) const { return pick_[color]; }
  int owner(int x) const { return owner_[x]; }

 private:
  const ColoredFamily& family_;
  std::vector<int> owner_;  // element -> color
  std::vector<int> pick_;   // color -> element
  std::vector<char> visited_;
};

}  // namespace

RainbowOutcome HallRainbow(const ColoredFamily& family) {
  HallMatcher matcher(family);
  int unmatched = -1;
  for (int c = 0; c < family.num_colors(); ++c) {
    if (!matcher.TryColor(c) && unmatched < 0) unmatched = c;
  }
  if (unmatched < 0) {
    ChoiceFunction choice;
    for (int c = 0; c < family.num_colors(); ++c) choice.Assign(c, matcher.pick(c));
    return choice;
  }
  // Koenig: every element reachable from `unmatched` is matched, so the
  // reachable colors have exactly one neighbour fewer than their number.
  std::vector<char> in_set(family.num_colors(), 0);
  std::vector<char> seen(family.ground_size(), 0);
  std::queue<int> queue;
  in_set[unmatched] = 1;
  queue.push(unmatched);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop();
    for (int x : family.set(c)) {
      if (seen[x]) continue;
      seen[x] = 1;
      const int next = matcher.owner(x);
      if (next >= 0 && !in_set[next]) {
        in_set[next] = 1;
        queue.push(next);
      }
    }
  }
  Violator violator;
  for (int c = 0; c < family.num_colors(); ++c) {
    if (in_set[c]) violator.colors.push_back(c);
  }
  return violator;
}

RainbowOutcome RadoRainbow(const ColoredFamily& family, const Matroid& matroid) {
  if (family.ground_size() > matroid.ground_size()) {
    throw InputError("ground mismatch: family ground has " +
                     std::to_string(family.ground_size()) +
                     " elements, matroid ground has " +
                     std::to_string(matroid.ground_size()));
  }
  std::vector<int> color_of;
  std::vector<int> element_of;
  std::vector<std::vector<int>> parts(family.num_colors());
  for (int c = 0; c < family.num_colors(); ++c) {
    for (int x : family.set(c)) {
      parts[c].push_back(static_cast<int>(element_of.size()));
      color_of.push_back(c);
      element_of.push_back(x);
    }
  }
  if (static_cast<int>(element_of.size()) > Subset::kCapacity) {
    throw InputError("too many (color, element) incidences for the Rado reduction");
  }
  const int copies = static_cast<int>(element_of.size());
  const Matroid colors = Matroid::Partition(
      copies, parts, std::vector<int>(family.num_colors(), 1));
  const Matroid lifted = Matroid::Lift(matroid, element_of);
  const IntersectionResult result = MatroidIntersection(colors, lifted);

  if (result.common.Size() == family.num_colors()) {
    ChoiceFunction choice;
    for (int copy : result.common) choice.Assign(color_of[copy], element_of[copy]);
    return choice;
  }
  // Colors with no copy in the cut: their copies all lie outside it, so
  // rank(A_J) <= |common| - (k - |J|) < |J|.
  std::vector<char> touched(family.num_colors(), 0);
  for (int copy : result.cut) touched[color_of[copy]] = 1;
  Violator violator;
  for (int c = 0; c < family.num_colors(); ++c) {
    if (!touched[c]) violator.colors.push_back(c);
  }
  return violator;
}

}  // namespace rainbow
