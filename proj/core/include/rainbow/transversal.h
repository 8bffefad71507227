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

#ifndef RAINBOW_TRANSVERSAL_H_
#define RAINBOW_TRANSVERSAL_H_

#include <variant>
#include <vector>

#include "rainbow/ground.h"
#include "rainbow/matroid.h"

namespace rainbow {

// A color set I certifying that no full rainbow set exists: for Hall,
// |union of A_I| < |I|; for Rado, rank(A_I) < |I|.
struct Violator {
  std::vector<int> colors;  // ascending
};

// Exactly one of: a full injective choice function, or a violator.
using RainbowOutcome = std::variant<ChoiceFunction, Violator>;

// Maximum bipartite matching between colors and elements. When some color
// stays unmatched, the violator is the set of colors reachable from the
// smallest unmatched color by alternating paths.
RainbowOutcome HallRainbow(const ColoredFamily& family);

// Full rainbow set independent in `matroid`, or a rank-deficient color set.
// The family's ground must embed in the matroid's ground. Implemented as the
// intersection of the color-partition matroid with `matroid` lifted to
// (color, element) copies.
RainbowOutcome RadoRainbow(const ColoredFamily& family, const Matroid& matroid);

}  // namespace rainbow

#endif  // RAINBOW_TRANSVERSAL_H_
