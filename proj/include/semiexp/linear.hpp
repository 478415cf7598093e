#pragma once

// Dense Gauss-Jordan elimination over an exact field (Rational or
// GaussRational). Pivots are taken in lexicographic order: leftmost column
// first, topmost available row within it. Free variables of a solve are set
// to zero, so every result here is deterministic.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semiexp/numeric.hpp"

namespace semiexp {

template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

template <class F>
struct RowEchelon {
  DenseMatrix<F>           matrix;  // reduced row echelon form
  std::vector<std::size_t> pivot_columns;
};

// Reduces in place; only the first `pivot_limit` columns are eligible as
// pivots (the rest ride along, e.g. augmented right-hand sides).
template <class F>
RowEchelon<F> reduced_row_echelon(DenseMatrix<F> a, std::size_t pivot_limit) {
  RowEchelon<F> out;
  std::size_t   rows = a.size();
  std::size_t   cols = rows == 0 ? 0 : a[0].size();
  std::size_t   r    = 0;
  for (std::size_t c = 0; c < pivot_limit && c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    F inv = F(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(a[r][j])) a[r][j] = a[r][j] * inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      F factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(a[r][j])) a[i][j] = a[i][j] - factor * a[r][j];
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.matrix = std::move(a);
  return out;
}

template <class F>
RowEchelon<F> reduced_row_echelon(DenseMatrix<F> a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  return reduced_row_echelon(std::move(a), cols);
}

template <class F>
std::size_t rank(DenseMatrix<F> a) {
  return reduced_row_echelon(std::move(a)).pivot_columns.size();
}

// Solves a X = B for every column of B at once. Returns nullopt if any
// column is inconsistent. X has a[0].size() rows.
template <class F>
std::optional<DenseMatrix<F>> solve_columns(const DenseMatrix<F>& a, const DenseMatrix<F>& b,
                                            std::size_t unknowns) {
  std::size_t rows = a.size();
  std::size_t rhs  = rows == 0 ? 0 : b[0].size();
  DenseMatrix<F> aug(rows, std::vector<F>(unknowns + rhs, F(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug[i][j] = a[i][j];
    for (std::size_t j = 0; j < rhs; ++j) aug[i][unknowns + j] = b[i][j];
  }
  auto        ech  = reduced_row_echelon(std::move(aug), unknowns);
  std::size_t rank = ech.pivot_columns.size();
  for (std::size_t i = rank; i < rows; ++i) {
    for (std::size_t j = 0; j < rhs; ++j) {
      if (!is_zero(ech.matrix[i][unknowns + j])) return std::nullopt;
    }
  }
  DenseMatrix<F> x(unknowns, std::vector<F>(rhs, F(0)));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rhs; ++j) x[ech.pivot_columns[i]][j] = ech.matrix[i][unknowns + j];
  }
  return x;
}

template <class F>
std::optional<std::vector<F>> solve(const DenseMatrix<F>& a, const std::vector<F>& b,
                                    std::size_t unknowns) {
  DenseMatrix<F> bb(b.size(), std::vector<F>(1));
  for (std::size_t i = 0; i < b.size(); ++i) bb[i][0] = b[i];
  auto x = solve_columns(a, bb, unknowns);
  if (!x) return std::nullopt;
  std::vector<F> out(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) out[i] = (*x)[i][0];
  return out;
}

// Basis of { v : a v = 0 }, one vector per free column, taken from the RREF.
template <class F>
std::vector<std::vector<F>> nullspace(const DenseMatrix<F>& a, std::size_t cols) {
  auto ech = reduced_row_echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
      v[ech.pivot_columns[i]] = F(0) - ech.matrix[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact determinant of a square matrix.
template <class F>
F determinant(DenseMatrix<F> a) {
  std::size_t n   = a.size();
  F           det = F(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = F(0) - det;
    }
    det = det * a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      F factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - factor * a[c][j];
    }
  }
  return det;
}

}  // namespace semiexp
