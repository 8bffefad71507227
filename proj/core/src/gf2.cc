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

#include "rainbow/gf2.h"

#include <algorithm>
#include <bit>

#include "rainbow/errors.h"

namespace rainbow {
namespace {

// Row-reduced basis where each basis vector also records, as a mask over
// the inputs, which input vectors it is the sum of.
struct Basis {
  std::vector<std::uint64_t> vectors;
  std::vector<std::vector<bool>> combos;
  std::vector<int> pivots;
  // Input indices that reduced to zero, with their dependency masks.
  std::vector<std::vector<bool>> kernel;
};

Basis Reduce(std::span<const std::uint64_t> vectors) {
  Basis basis;
  const std::size_t m = vectors.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t v = vectors[i];
    std::vector<bool> combo(m, false);
    combo[i] = true;
    for (std::size_t b = 0; b < basis.vectors.size(); ++b) {
      if ((v >> basis.pivots[b]) & 1) {
        v ^= basis.vectors[b];
        for (std::size_t k = 0; k < m; ++k) combo[k] = combo[k] ^ basis.combos[b][k];
      }
    }
    if (v == 0) {
      basis.kernel.push_back(std::move(combo));
      continue;
    }
    basis.pivots.push_back(63 - std::countl_zero(v));
    basis.vectors.push_back(v);
    basis.combos.push_back(std::move(combo));
  }
  return basis;
}

}  // namespace

int Gf2Rank(std::span<const std::uint64_t> vectors) {
  return static_cast<int>(Reduce(vectors).vectors.size());
}

bool Gf2InSpan(std::span<const std::uint64_t> vectors, std::uint64_t target) {
  const Basis basis = Reduce(vectors);
  for (std::size_t b = 0; b < basis.vectors.size(); ++b) {
    if ((target >> basis.pivots[b]) & 1) target ^= basis.vectors[b];
  }
  return target == 0;
}

std::optional<std::vector<int>> Gf2MinimumSupportSolution(
    std::span<const std::uint64_t> vectors, std::uint64_t target, int max_nullity) {
  const Basis basis = Reduce(vectors);
  const std::size_t m = vectors.size();
  std::vector<bool> particular(m, false);
  for (std::size_t b = 0; b < basis.vectors.size(); ++b) {
    if ((target >> basis.pivots[b]) & 1) {
      target ^= basis.vectors[b];
      for (std::size_t k = 0; k < m; ++k) {
        particular[k] = particular[k] ^ basis.combos[b][k];
      }
    }
  }
  if (target != 0) return std::nullopt;
  const int nullity = static_cast<int>(basis.kernel.size());
  if (nullity > max_nullity) {
    throw CapExceeded("solution space too large to enumerate");
  }
  std::vector<bool> best = particular;
  int best_size = static_cast<int>(std::count(best.begin(), best.end(), true));
  std::vector<bool> current = particular;
  // Gray code walk over the kernel.
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << nullity); ++step) {
    const int flip = std::countr_zero(step);
    for (std::size_t k = 0; k < m; ++k) {
      current[k] = current[k] ^ basis.kernel[flip][k];
    }
    const int size = static_cast<int>(std::count(current.begin(), current.end(), true));
    if (size < best_size) {
      best_size = size;
      best = current;
    }
  }
  std::vector<int> support;
  for (std::size_t k = 0; k < m; ++k) {
    if (best[k]) support.push_back(static_cast<int>(k));
  }
  return support;
}

}  // namespace rainbow
