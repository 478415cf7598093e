#include "semiexp/integer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace semiexp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t h = 0; h < a.cols(); ++h) {
      if (sgn(a(i, h)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, h) * b(h, j);
    }
  }
  return out;
}

Integer determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix a    = in;
  Integer   prev = 1;
  int       sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row/column operations applied to the working matrix and its transform.
struct SmithWork {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i -= q * row_j
  void sub_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (sgn(a(j, c)) != 0) a(i, c) -= q * a(j, c);
    }
    for (std::size_t c = 0; c < u.cols(); ++c) {
      if (sgn(u(j, c)) != 0) u(i, c) -= q * u(j, c);
    }
  }
  // col_i -= q * col_j
  void sub_col(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (sgn(a(r, j)) != 0) a(r, i) -= q * a(r, j);
    }
    for (std::size_t r = 0; r < v.rows(); ++r) {
      if (sgn(v(r, j)) != 0) v(r, i) -= q * v(r, j);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Integer trunc_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& g) {
  std::size_t rows = g.rows(), cols = g.cols();
  SmithWork   w{g, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  auto&       a = w.a;
  SmithForm   out;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a(i, j)) != 0 && (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        w.sub_row(i, t, trunc_quotient(a(i, t), a(t, t)));
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        w.sub_col(j, t, trunc_quotient(a(t, j), a(t, t)));
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (!divides(a(t, t), a(i, j))) {
            w.sub_row(t, i, Integer(-1));  // row_t += row_i
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (sgn(a(t, t)) < 0) w.negate_row(t);
    out.diagonal.push_back(a(t, t));
  }

  out.form  = std::move(w.a);
  out.left  = std::move(w.u);
  out.right = std::move(w.v);
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& gens) {
  std::size_t                       cols = gens.cols();
  std::vector<std::vector<Integer>> work;
  for (std::size_t i = 0; i < gens.rows(); ++i) work.push_back(gens.row(i));

  HermiteForm h;
  h.cols        = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < work.size(); ++c) {
    // Euclid on column c across rows r.. until a single nonzero remains.
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t i = r; i < work.size(); ++i) {
        if (sgn(work[i][c]) != 0 && (best == work.size() || cmpabs(work[i][c], work[best][c]) < 0)) {
          best = i;
        }
      }
      if (best == work.size()) break;
      std::swap(work[r], work[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < work.size(); ++i) {
        if (sgn(work[i][c]) == 0) continue;
        Integer q = trunc_quotient(work[i][c], work[r][c]);
        for (std::size_t j = c; j < cols; ++j) work[i][j] -= q * work[r][j];
        if (sgn(work[i][c]) != 0) others = true;
      }
      if (!others) break;
    }
    if (sgn(work[r][c]) == 0) continue;
    if (sgn(work[r][c]) < 0) {
      for (std::size_t j = c; j < cols; ++j) work[r][j] = -work[r][j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), work[i][c].get_mpz_t(), work[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = c; j < cols; ++j) work[i][j] -= q * work[r][j];
    }
    h.pivots.push_back(c);
    ++r;
  }
  work.resize(r);
  h.rows = std::move(work);
  return h;
}

bool in_lattice(const HermiteForm& h, std::vector<Integer> v) {
  if (v.size() != h.cols) throw std::invalid_argument("in_lattice: length mismatch");
  for (std::size_t r = 0; r < h.rows.size(); ++r) {
    std::size_t c = h.pivots[r];
    for (std::size_t j = (r == 0 ? 0 : h.pivots[r - 1] + 1); j < c; ++j) {
      if (sgn(v[j]) != 0) return false;
    }
    if (!divides(h.rows[r][c], v[c])) return false;
    Integer q = v[c] / h.rows[r][c];
    for (std::size_t j = c; j < h.cols; ++j) v[j] -= q * h.rows[r][j];
  }
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace semiexp
