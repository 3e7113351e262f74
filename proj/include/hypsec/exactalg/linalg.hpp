#pragma once

#include <cstddef>
#include <vector>

#include "hypsec/exactalg/field.hpp"

namespace hypsec::linalg {

template <FieldElement F>
using DenseMatrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form by exact Gaussian elimination. Returns
/// the pivot column of each nonzero row.
template <FieldElement F>
std::vector<std::size_t> rref(DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const F inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <FieldElement F>
std::size_t rank(DenseMatrix<F> m) {
  return rref(m).size();
}

/// Basis of {v : m v = 0}; `like` fixes the field when m has no rows.
template <FieldElement F>
std::vector<std::vector<F>> nullspace(DenseMatrix<F> m, std::size_t cols, const F& like) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, like.zero_like());
    v[free] = like.one_like();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hypsec::linalg
