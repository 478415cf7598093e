#include "semiexp/algebra.hpp"

#include <cmath>

#include "semiexp/linear.hpp"

namespace semiexp {

const char* to_string(Ring r) {
  switch (r) {
    case Ring::Int: return "Int";
    case Ring::Rat: return "Rat";
    case Ring::GaussRat: return "GaussRat";
    case Ring::Float64Complex: return "Float64Complex";
  }
  return "?";
}

Rational l1_norm_bound(const AlgElem<GaussRational>& a) {
  Rational acc(0);
  for (const auto& [t, c] : a.terms()) acc += c.modulus_bound();
  return acc;
}

template <class F>
std::optional<AlgElem<F>> solve_left_identity(const SemigroupRef& sp, bool two_sided) {
  const auto& s = *sp;
  std::size_t m = s.size();
  // Unknowns e(r). For each s and u, sum_{r : rs = u} e(r) = [u == s], and
  // the mirrored equations with sr = u when two-sided.
  DenseMatrix<F> rows;
  std::vector<F> rhs;
  auto add_block = [&](bool left) {
    for (Element x = 0; x < m; ++x) {
      DenseMatrix<F> block(m, std::vector<F>(m, F(0)));
      for (Element r = 0; r < m; ++r) {
        Element u   = left ? s.product(r, x) : s.product(x, r);
        block[u][r] = block[u][r] + F(1);
      }
      for (Element u = 0; u < m; ++u) {
        rows.push_back(std::move(block[u]));
        rhs.push_back(u == x ? F(1) : F(0));
      }
    }
  };
  add_block(true);
  if (two_sided) add_block(false);

  auto sol = solve(rows, rhs, m);
  if (!sol) return std::nullopt;
  AlgElem<F> e(sp);
  for (Element r = 0; r < m; ++r) e.set(r, (*sol)[r]);
  return e;
}

template std::optional<AlgElem<Rational>> solve_left_identity<Rational>(const SemigroupRef&,
                                                                        bool);
template std::optional<AlgElem<GaussRational>> solve_left_identity<GaussRational>(
    const SemigroupRef&, bool);

std::optional<AlgMat<Rational>> right_solve(const AlgMat<Rational>& a,
                                            const AlgMat<Rational>& e) {
  if (a.rows() != e.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "A and E must have the same number of rows");
  }
  if (!same_semigroup(a.semigroup(), e.semigroup())) {
    throw Error(ErrorCode::SemigroupMismatch, "A and E live over different semigroups");
  }
  const auto& s = *a.semigroup();
  std::size_t m = s.size(), n = a.rows(), k = a.cols(), l = e.cols();

  // Row (i,u), column (h,t): coefficient of delta_u in (A * delta_t e_h)_i.
  DenseMatrix<Rational> op(n * m, std::vector<Rational>(k * m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < k; ++h) {
      for (const auto& [r, c] : a(i, h).terms()) {
        for (Element t = 0; t < m; ++t) op[i * m + s.product(r, t)][h * m + t] += c;
      }
    }
  }
  DenseMatrix<Rational> rhs(n * m, std::vector<Rational>(l, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      for (const auto& [u, c] : e(i, j).terms()) rhs[i * m + u][j] = c;
    }
  }
  auto x = solve_columns(op, rhs, k * m);
  if (!x) return std::nullopt;
  AlgMat<Rational> out(a.semigroup(), k, l);
  for (std::size_t h = 0; h < k; ++h) {
    for (std::size_t j = 0; j < l; ++j) {
      for (Element t = 0; t < m; ++t) out(h, j).set(t, (*x)[h * m + t][j]);
    }
  }
  return out;
}

std::optional<AlgMat<Rational>> right_inverse_solve(const AlgMat<Rational>& a,
                                                    const AlgMat<Rational>& e) {
  if (a.rows() != a.cols() || e.rows() != e.cols() || a.rows() != e.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right_inverse_solve expects square n x n inputs");
  }
  return right_solve(a, e);
}

NeumannResult neumann_refine(const AlgMat<Complex>& a, const AlgMat<Complex>& x,
                             const AlgMat<Complex>& a_inv, const AlgMat<Complex>& e, double tol,
                             std::size_t max_terms) {
  std::size_t n = a.rows();
  for (const auto* mat : {&a, &x, &a_inv, &e}) {
    if (mat->rows() != n || mat->cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "neumann_refine expects n x n matrices");
    }
  }
  AlgMat<Complex> step = matrix_multiply(x, a_inv);
  double          q    = l1_norm(step);
  if (q >= 1.0) {
    throw Error(ErrorCode::NotContractive, "||x * a_inv||_1 = " + std::to_string(q) + " >= 1");
  }
  double pre = l1_norm(matrix_multiply(a, a_inv) - e);
  if (pre > tol) {
    throw Error(ErrorCode::PreconditionViolated,
                "a * a_inv differs from e by " + std::to_string(pre));
  }

  NeumannResult res{a_inv, 0, q, q / (1.0 - q), 0.0};
  AlgMat<Complex> term = a_inv;
  while (res.tail_bound > tol) {
    if (res.terms == max_terms) {
      throw Error(ErrorCode::Budget, "tail bound " + std::to_string(res.tail_bound) +
                                         " still above tol after " + std::to_string(max_terms) +
                                         " terms");
    }
    term = matrix_multiply(term, step);
    res.inverse += term;
    ++res.terms;
    res.tail_bound = std::pow(q, static_cast<double>(res.terms + 1)) / (1.0 - q);
  }
  res.residual = l1_norm(matrix_multiply(a - x, res.inverse) - e);
  return res;
}

Ring ring_of_any(const AnyElem& e) {
  return std::visit([](const auto& v) { return ring_of<typename std::decay_t<decltype(v)>::coeff_type>::value; }, e);
}

namespace {

template <class Op>
AnyElem same_ring_apply(const AnyElem& a, const AnyElem& b, Op op) {
  if (a.index() != b.index()) {
    throw Error(ErrorCode::RingMismatch, std::string(to_string(ring_of_any(a))) + " vs " +
                                             to_string(ring_of_any(b)));
  }
  return std::visit(
      [&](const auto& x) -> AnyElem {
        using E = std::decay_t<decltype(x)>;
        return op(x, std::get<E>(b));
      },
      a);
}

}  // namespace

AnyElem convolve(const AnyElem& a, const AnyElem& b) {
  return same_ring_apply(a, b, [](const auto& x, const auto& y) { return convolve(x, y); });
}

AnyElem dual_convolve(const AnyElem& f, const AnyElem& a) {
  return same_ring_apply(f, a, [](const auto& x, const auto& y) { return dual_convolve(x, y); });
}

}  // namespace semiexp
