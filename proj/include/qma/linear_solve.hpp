// Small dense Gauss-Jordan elimination over an exact field (any type with
// +, -, *, / and an is_zero test via coeff_is_zero).  Used to carve out
// solution spaces of linear coefficient systems, e.g. the quadratic
// one-sided regular pairs in the test suites.
#pragma once

#include <stdexcept>
#include <vector>

#include "qma/form.hpp"  // coeff_is_zero

namespace qma {

template <class F>
struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<F> e;  // row-major

  DenseMatrix(int r, int c, const F& fill) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, fill) {}
  F& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  const F& operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
};

// Basis of the right nullspace of m (vectors of length m.cols).  Exact
// pivoting: the first nonzero entry wins.
template <class F>
std::vector<std::vector<F>> nullspace_basis(DenseMatrix<F> m, const F& zero, const F& one) {
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot_col(m.cols, false);
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (!coeff_is_zero(m(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m(row, c), m(pr, c));
    const F inv_lead = one / m(row, col);
    for (int c = 0; c < m.cols; ++c) m(row, c) = m(row, c) * inv_lead;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || coeff_is_zero(m(r, col))) continue;
      const F f = m(r, col);
      for (int c = 0; c < m.cols; ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivot_col_of_row.push_back(col);
    is_pivot_col[col] = true;
    ++row;
  }
  std::vector<std::vector<F>> basis;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<F> v(m.cols, zero);
    v[free_col] = one;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = zero - m(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qma
