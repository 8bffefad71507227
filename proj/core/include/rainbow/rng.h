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

#ifndef RAINBOW_RNG_H_
#define RAINBOW_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

// Seeded generator used by every randomized sweep and instance generator.
// Bounded draws are done here rather than through <random> distributions so
// that a seed reproduces the same instances on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, n). Requires n > 0.
  int Below(int n);
  // Uniform in [lo, hi].
  int Between(int lo, int hi) { return lo + Below(hi - lo + 1); }
  // True with probability num/den.
  bool Chance(int num, int den) { return Below(den) < num; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
      std::swap(items[i], items[Below(i + 1)]);
    }
  }
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    Shuffle(std::span<T>(items));
  }

  // A uniformly random permutation of 0..n-1.
  std::vector<int> Permutation(int n);
  // A uniformly random k-subset of 0..n-1, sorted.
  std::vector<int> Sample(int n, int k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rainbow

#endif  // RAINBOW_RNG_H_
