#pragma once

// Arbitrary-precision integer matrices: Smith normal form with unimodular
// transforms, Hermite normal form of a row lattice, exact determinants.

#include <cstddef>
#include <vector>

#include "semiexp/numeric.hpp"

namespace semiexp {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Integer&       operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] IntMatrix            transposed() const;
  [[nodiscard]] std::vector<Integer> row(std::size_t i) const;
  [[nodiscard]] std::vector<Integer> column(std::size_t j) const;
  [[nodiscard]] bool                 is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t          rows_ = 0;
  std::size_t          cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& a);

struct SmithForm {
  // Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> diagonal;
  IntMatrix            left;   // U, rows x rows
  IntMatrix            right;  // V, cols x cols
  IntMatrix            form;   // U * G * V

  [[nodiscard]] std::size_t rank() const noexcept { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& g);

// Row-style Hermite normal form of the lattice spanned by the rows of a
// matrix: echelon rows with positive pivots, entries above each pivot reduced
// into [0, pivot).
struct HermiteForm {
  std::size_t              cols = 0;
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
};

HermiteForm hermite_normal_form(const IntMatrix& generators_as_rows);

// v in the Z-span of the Hermite rows.
bool in_lattice(const HermiteForm& h, std::vector<Integer> v);

}  // namespace semiexp
