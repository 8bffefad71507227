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

#ifndef RAINBOW_GF2_H_
#define RAINBOW_GF2_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

// Vectors over the two-element field packed into 64-bit words.
int Gf2Rank(std::span<const std::uint64_t> vectors);
bool Gf2InSpan(std::span<const std::uint64_t> vectors, std::uint64_t target);

// Indices of a smallest subset of `vectors` summing to `target`, or nullopt
// if `target` is outside their span. Enumerates the solution space, so it
// throws CapExceeded when the nullity exceeds `max_nullity`.
std::optional<std::vector<int>> Gf2MinimumSupportSolution(
    std::span<const std::uint64_t> vectors, std::uint64_t target,
    int max_nullity = 20);

}  // namespace rainbow

#endif  // RAINBOW_GF2_H_
