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

#ifndef RAINBOW_LATIN_H_
#define RAINBOW_LATIN_H_

#include <vector>

namespace rainbow {

// n x n array over 1..n whose rows and columns are permutations.
class LatinSquare {
 public:
  // Throws InputError naming the first bad cell.
  explicit LatinSquare(std::vector<std::vector<int>> rows);

  // Addition table of Z_n, shifted to symbols 1..n.
  static LatinSquare Cyclic(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  int At(int row, int col) const { return rows_[row][col]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

struct Cell {
  int row = 0;
  int col = 0;
};

// A partial transversal: cells in distinct rows, columns and symbols.
struct Transversal {
  std::vector<Cell> cells;

  int size() const { return static_cast<int>(cells.size()); }
};

bool IsTransversal(const LatinSquare& square, const Transversal& transversal);

}  // namespace rainbow

#endif  // RAINBOW_LATIN_H_
