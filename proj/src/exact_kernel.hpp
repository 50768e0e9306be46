#pragma once

// Kernel of a rational matrix by reduced row echelon form.

#include <vector>

#include "vinbun/laurent.hpp"

namespace vinbun::detail {

struct KernelBasis {
  // vectors[j] has a 1 at freeColumns[j] and 0 at every other free column,
  // so the coordinates of a kernel vector x in this basis are x[freeColumns].
  std::vector<std::vector<Rational>> vectors;
  std::vector<int> freeColumns;
};

inline KernelBasis rationalKernel(std::vector<std::vector<Rational>> rows, int cols) {
  std::vector<int> pivotCol;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivotCol.push_back(c);
    ++r;
  }
  std::vector<bool> isPivot(cols, false);
  for (int c : pivotCol) isPivot[c] = true;
  KernelBasis basis;
  for (int f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (int i = 0; i < static_cast<int>(pivotCol.size()); ++i) v[pivotCol[i]] = -rows[i][f];
    basis.vectors.push_back(std::move(v));
    basis.freeColumns.push_back(f);
  }
  return basis;
}

}  // namespace vinbun::detail
