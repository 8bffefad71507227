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

#include "rainbow/subset.h"

namespace rainbow {

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) Insert(e);
}

Subset::Subset(std::span<const int> elements) {
  for (int e : elements) Insert(e);
}

Subset Subset::Range(int n) {
  Subset s;
  for (int i = 0; i < n; ++i) s.Insert(i);
  return s;
}

int Subset::NextAfter(int e) const {
  int pos = e + 1;
  while (pos < kCapacity) {
    const int word = pos >> 6;
    const std::uint64_t bits = words_[word] >> (pos & 63);
    if (bits != 0) return pos + std::countr_zero(bits);
    pos = (word + 1) << 6;
  }
  return kCapacity;
}

std::vector<int> Subset::ToVector() const {
  std::vector<int> out;
  for (int e : *this) out.push_back(e);
  return out;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  for (int i = 0; i < kWords; ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  for (int i = 0; i < kWords; ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  for (int i = 0; i < kWords; ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  for (int i = 0; i < kWords; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

}  // namespace rainbow
