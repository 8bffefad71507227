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

#include "rainbow/latin.h"

#include <string>

#include "rainbow/errors.h"

namespace rainbow {

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  const int n = order();
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows_[r].size()) != n) {
      throw InputError("row " + std::to_string(r) + " has length " +
                       std::to_string(rows_[r].size()) + ", expected " +
                       std::to_string(n));
    }
  }
  for (int r = 0; r < n; ++r) {
    std::vector<char> in_row(n + 1, 0);
    for (int c = 0; c < n; ++c) {
      const int x = rows_[r][c];
      if (x < 1 || x > n) {
        throw InputError("cell (" + std::to_string(r) + "," + std::to_string(c) +
                         "): symbol " + std::to_string(x) + " outside 1.." +
                         std::to_string(n));
      }
      if (in_row[x]) {
        throw InputError("cell (" + std::to_string(r) + "," + std::to_string(c) +
                         "): symbol " + std::to_string(x) + " repeated in row " +
                         std::to_string(r));
      }
      in_row[x] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> in_col(n + 1, 0);
    for (int r = 0; r < n; ++r) {
      const int x = rows_[r][c];
      if (in_col[x]) {
        throw InputError("cell (" + std::to_string(r) + "," + std::to_string(c) +
                         "): symbol " + std::to_string(x) + " repeated in column " +
                         std::to_string(c));
      }
      in_col[x] = 1;
    }
  }
}

LatinSquare LatinSquare::Cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) rows[r][c] = (r + c) % n + 1;
  }
  return LatinSquare(std::move(rows));
}

bool IsTransversal(const LatinSquare& square, const Transversal& transversal) {
  const int n = square.order();
  std::vector<char> rows(n, 0), cols(n, 0), symbols(n + 1, 0);
  for (const Cell& cell : transversal.cells) {
    if (cell.row < 0 || cell.row >= n || cell.col < 0 || cell.col >= n) {
      return false;
    }
    const int x = square.At(cell.row, cell.col);
    if (rows[cell.row] || cols[cell.col] || symbols[x]) return false;
    rows[cell.row] = cols[cell.col] = symbols[x] = 1;
  }
  return true;
}

}  // namespace rainbow
