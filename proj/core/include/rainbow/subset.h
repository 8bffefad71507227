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

#ifndef RAINBOW_SUBSET_H_
#define RAINBOW_SUBSET_H_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rainbow {

// A subset of {0, ..., kCapacity-1} stored as a fixed-width bitset. Used for
// matroid ground sets, where every construction in this library stays well
// below the capacity.
class Subset {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    Iterator(const Subset* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->NextAfter(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const Subset* set_ = nullptr;
    int pos_ = kCapacity;
  };

  Subset() = default;
  Subset(std::initializer_list<int> elements);
  explicit Subset(std::span<const int> elements);

  // {0, ..., n-1}.
  static Subset Range(int n);

  bool Contains(int e) const {
    return (words_[e >> 6] >> (e & 63)) & 1ULL;
  }
  void Insert(int e) { words_[e >> 6] |= 1ULL << (e & 63); }
  void Erase(int e) { words_[e >> 6] &= ~(1ULL << (e & 63)); }

  int Size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool Empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Smallest element, or kCapacity when empty.
  int First() const { return NextAfter(-1); }
  // Smallest element greater than `e`, or kCapacity.
  int NextAfter(int e) const;

  Iterator begin() const { return Iterator(this, First()); }
  Iterator end() const { return Iterator(this, kCapacity); }

  std::vector<int> ToVector() const;

  Subset With(int e) const {
    Subset copy = *this;
    copy.Insert(e);
    return copy;
  }
  Subset Without(int e) const {
    Subset copy = *this;
    copy.Erase(e);
    return copy;
  }

  bool IsSubsetOf(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace rainbow

#endif  // RAINBOW_SUBSET_H_
