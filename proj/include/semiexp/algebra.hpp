#pragma once

// The convolution algebras R[S] for finite S and matrices over them.
//
// For finite S, l^1(S) and l^inf(S) are both the finitely supported functions
// S -> C, so one sparse representation (AlgElem) serves for a in Z[S], Q[S],
// C[S] as well as for functionals f in l^inf(S).

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

#include "semiexp/error.hpp"
#include "semiexp/numeric.hpp"
#include "semiexp/semigroup.hpp"

namespace semiexp {

enum class Ring { Int, Rat, GaussRat, Float64Complex };

template <class C>
struct ring_of;
template <>
struct ring_of<Integer> : std::integral_constant<Ring, Ring::Int> {};
template <>
struct ring_of<Rational> : std::integral_constant<Ring, Ring::Rat> {};
template <>
struct ring_of<GaussRational> : std::integral_constant<Ring, Ring::GaussRat> {};
template <>
struct ring_of<Complex> : std::integral_constant<Ring, Ring::Float64Complex> {};

const char* to_string(Ring r);

// Coefficient conversions along Int -> Rat -> GaussRat -> Float64Complex.
template <class To, class From>
To convert_coeff(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, Rational>) {
    static_assert(std::is_same_v<From, Integer>);
    return Rational(v);
  } else if constexpr (std::is_same_v<To, GaussRational>) {
    static_assert(!std::is_same_v<From, Complex>);
    return GaussRational(Rational(v));
  } else if constexpr (std::is_same_v<To, Complex>) {
    if constexpr (std::is_same_v<From, GaussRational>) {
      return Complex(v.re.get_d(), v.im.get_d());
    } else {
      return Complex(v.get_d(), 0.0);
    }
  }
}

// Exact absolute value for Int/Rat; floating modulus for the complex rings.
template <class C>
auto abs_value(const C& v) {
  if constexpr (std::is_same_v<C, Integer> || std::is_same_v<C, Rational>) {
    return Rational(abs(v));
  } else if constexpr (std::is_same_v<C, GaussRational>) {
    return v.modulus();
  } else {
    return std::abs(v);
  }
}

template <class C>
using norm_t = decltype(abs_value(std::declval<const C&>()));

template <class C>
class AlgElem {
 public:
  using coeff_type = C;
  using Terms      = std::map<Element, C>;

  explicit AlgElem(SemigroupRef s) : sg_(std::move(s)) {}

  static AlgElem delta(SemigroupRef s, Element e, C c = C(1)) {
    AlgElem out(std::move(s));
    out.set(e, std::move(c));
    return out;
  }

  // 1_F
  static AlgElem indicator(SemigroupRef s, const ElementSet& f) {
    AlgElem out(std::move(s));
    for (auto e : f) out.set(e, C(1));
    return out;
  }

  [[nodiscard]] const SemigroupRef& semigroup() const noexcept { return sg_; }
  [[nodiscard]] std::size_t         dim() const noexcept { return sg_->size(); }
  [[nodiscard]] const Terms&        terms() const noexcept { return terms_; }
  [[nodiscard]] bool                is_zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] C coeff(Element e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void set(Element e, C c) {
    check_index(e);
    if (semiexp::is_zero(c)) {
      terms_.erase(e);
    } else {
      terms_[e] = std::move(c);
    }
  }

  void add(Element e, const C& c) {
    check_index(e);
    if (semiexp::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (semiexp::is_zero(it->second)) terms_.erase(it);
    }
  }

  // f 1_F
  [[nodiscard]] AlgElem restricted(const ElementSet& f) const {
    AlgElem out(sg_);
    for (auto e : f) {
      auto it = terms_.find(e);
      if (it != terms_.end()) out.terms_.insert(*it);
    }
    return out;
  }

  template <class D>
  [[nodiscard]] AlgElem<D> cast() const {
    AlgElem<D> out(sg_);
    for (const auto& [e, c] : terms_) out.set(e, convert_coeff<D>(c));
    return out;
  }

  AlgElem& operator+=(const AlgElem& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add(e, C(0) - c);
    return *this;
  }
  AlgElem& operator*=(const C& k) {
    if (semiexp::is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * k;
    return *this;
  }

  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const C& k, AlgElem a) { return a *= k; }
  friend bool    operator==(const AlgElem& a, const AlgElem& b) {
    return same_semigroup(a.sg_, b.sg_) && a.terms_ == b.terms_;
  }

  void require_same(const AlgElem& o) const {
    if (!same_semigroup(sg_, o.sg_)) {
      throw Error(ErrorCode::SemigroupMismatch, "elements live over different semigroups");
    }
  }

 private:
  void check_index(Element e) const {
    if (e >= sg_->size()) {
      throw Error(ErrorCode::OutOfRange, "element index " + std::to_string(e) + " out of range");
    }
  }

  SemigroupRef sg_;
  Terms        terms_;
};

template <class C>
using AlgVec = std::vector<AlgElem<C>>;

template <class C>
class AlgMat {
 public:
  AlgMat(SemigroupRef s, std::size_t rows, std::size_t cols)
      : sg_(s), rows_(rows), cols_(cols), entries_(rows * cols, AlgElem<C>(s)) {}

  // Diagonal matrix with `e` on the diagonal.
  static AlgMat diagonal(const AlgElem<C>& e, std::size_t n) {
    AlgMat out(e.semigroup(), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = e;
    return out;
  }

  [[nodiscard]] std::size_t         rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t         cols() const noexcept { return cols_; }
  [[nodiscard]] const SemigroupRef& semigroup() const noexcept { return sg_; }

  AlgElem<C>&       operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const AlgElem<C>& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  [[nodiscard]] AlgVec<C> column(std::size_t j) const {
    AlgVec<C> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  template <class D>
  [[nodiscard]] AlgMat<D> cast() const {
    AlgMat<D> out(sg_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).template cast<D>();
    }
    return out;
  }

  AlgMat& operator+=(const AlgMat& o) {
    require_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  AlgMat& operator-=(const AlgMat& o) {
    require_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  AlgMat& operator*=(const C& k) {
    for (auto& e : entries_) e *= k;
    return *this;
  }
  friend AlgMat operator+(AlgMat a, const AlgMat& b) { return a += b; }
  friend AlgMat operator-(AlgMat a, const AlgMat& b) { return a -= b; }
  friend AlgMat operator*(const C& k, AlgMat a) { return a *= k; }
  friend bool   operator==(const AlgMat& a, const AlgMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void require_shape(const AlgMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    }
  }

  SemigroupRef            sg_;
  std::size_t             rows_;
  std::size_t             cols_;
  std::vector<AlgElem<C>> entries_;
};

// (a*b)(s) = sum over rt = s of a(r) b(t).
template <class C>
AlgElem<C> convolve(const AlgElem<C>& a, const AlgElem<C>& b) {
  a.require_same(b);
  const auto& s = *a.semigroup();
  AlgElem<C>  out(a.semigroup());
  for (const auto& [r, x] : a.terms()) {
    for (const auto& [t, y] : b.terms()) out.add(s.product(r, t), x * y);
  }
  return out;
}

// (f.a)(s) = sum_t f(ts) a(t): the adjoint of left convolution by a.
template <class C>
AlgElem<C> dual_convolve(const AlgElem<C>& f, const AlgElem<C>& a) {
  f.require_same(a);
  const auto& s = *f.semigroup();
  AlgElem<C>  out(f.semigroup());
  for (Element x = 0; x < s.size(); ++x) {
    C acc(0);
    for (const auto& [t, y] : a.terms()) {
      auto it = f.terms().find(s.product(t, x));
      if (it != f.terms().end()) acc += it->second * y;
    }
    out.set(x, std::move(acc));
  }
  return out;
}

template <class C>
C dual_pair(const AlgElem<C>& f, const AlgElem<C>& a) {
  f.require_same(a);
  C acc(0);
  for (const auto& [t, y] : a.terms()) {
    auto it = f.terms().find(t);
    if (it != f.terms().end()) acc += it->second * y;
  }
  return acc;
}

template <class C>
C dual_pair(const AlgVec<C>& f, const AlgVec<C>& a) {
  if (f.size() != a.size()) throw Error(ErrorCode::DimensionMismatch, "pairing length mismatch");
  C acc(0);
  for (std::size_t i = 0; i < f.size(); ++i) acc += dual_pair(f[i], a[i]);
  return acc;
}

template <class C>
norm_t<C> l1_norm(const AlgElem<C>& a) {
  norm_t<C> acc(0);
  for (const auto& [t, c] : a.terms()) acc += abs_value(c);
  return acc;
}

template <class C>
norm_t<C> sup_norm(const AlgElem<C>& f) {
  norm_t<C> best(0);
  for (const auto& [t, c] : f.terms()) {
    auto v = abs_value(c);
    if (best < v) best = v;
  }
  return best;
}

// ||A||_1 is the sum of the l^1 norms of all entries.
template <class C>
norm_t<C> l1_norm(const AlgMat<C>& m) {
  norm_t<C> acc(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) acc += l1_norm(m(i, j));
  }
  return acc;
}

template <class C>
norm_t<C> l1_norm(const AlgVec<C>& v) {
  norm_t<C> acc(0);
  for (const auto& e : v) acc += l1_norm(e);
  return acc;
}

template <class C>
norm_t<C> sup_norm(const AlgVec<C>& v) {
  norm_t<C> best(0);
  for (const auto& e : v) {
    auto x = sup_norm(e);
    if (best < x) best = x;
  }
  return best;
}

// Exact sum of |re| + |im| over all coefficients; an upper bound for the
// l^1 norm of a GaussRational element.
Rational l1_norm_bound(const AlgElem<GaussRational>& a);

template <class C>
AlgMat<C> matrix_multiply(const AlgMat<C>& a, const AlgMat<C>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "inner dimensions " + std::to_string(a.cols()) +
                                                  " and " + std::to_string(b.rows()) +
                                                  " differ");
  }
  if (!same_semigroup(a.semigroup(), b.semigroup())) {
    throw Error(ErrorCode::SemigroupMismatch, "matrices live over different semigroups");
  }
  AlgMat<C> out(a.semigroup(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t h = 0; h < a.cols(); ++h) out(i, j) += convolve(a(i, h), b(h, j));
    }
  }
  return out;
}

// A * b for a column vector b.
template <class C>
AlgVec<C> matrix_apply(const AlgMat<C>& a, const AlgVec<C>& b) {
  if (a.cols() != b.size()) throw Error(ErrorCode::DimensionMismatch, "A * b length mismatch");
  AlgVec<C> out(a.rows(), AlgElem<C>(a.semigroup()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t h = 0; h < a.cols(); ++h) out[i] += convolve(a(i, h), b[h]);
  }
  return out;
}

// (f.A)_j = sum_i f_i . a_ij; satisfies <f, A*b> = <f.A, b>.
template <class C>
AlgVec<C> matrix_dual_apply(const AlgVec<C>& f, const AlgMat<C>& a) {
  if (f.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "f has length " + std::to_string(f.size()) +
                                                  " but A has " + std::to_string(a.rows()) +
                                                  " rows");
  }
  AlgVec<C> out(a.cols(), AlgElem<C>(a.semigroup()));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out[j] += dual_convolve(f[i], a(i, j));
  }
  return out;
}

// Canonical left identity of Q[S] (or two-sided identity), from the RREF of
// e * delta_s = delta_s (and delta_s * e = delta_s). For finite S this
// decides the existence of a left identity of l^1(S) exactly.
template <class F = Rational>
std::optional<AlgElem<F>> solve_left_identity(const SemigroupRef& s, bool two_sided = false);

// Solves A * X = E over Q. A is n x k, E is n x l, X is k x l. Deterministic
// particular solution, or nullopt when inconsistent.
std::optional<AlgMat<Rational>> right_solve(const AlgMat<Rational>& a, const AlgMat<Rational>& e);

// Square form of right_solve; throws DimensionMismatch for non-square input.
std::optional<AlgMat<Rational>> right_inverse_solve(const AlgMat<Rational>& a,
                                                    const AlgMat<Rational>& e);

struct NeumannResult {
  AlgMat<Complex> inverse;       // S_N
  std::size_t     terms = 0;     // N
  double          contraction;   // ||x * a_inv||_1
  double          tail_bound;    // q^{N+1} / (1 - q)
  double          residual;      // measured ||(a - x) * S_N - e||_1
};

// Right e-inverse of a - x from a right e-inverse of a via the Neumann
// series S_N = a_inv + sum_{k=1}^{N} a_inv (x a_inv)^k.
NeumannResult neumann_refine(const AlgMat<Complex>& a, const AlgMat<Complex>& x,
                             const AlgMat<Complex>& a_inv, const AlgMat<Complex>& e, double tol,
                             std::size_t max_terms);

// Runtime-tagged element for the I/O boundary, where the ring is only known
// after parsing.
using AnyElem = std::variant<AlgElem<Integer>, AlgElem<Rational>, AlgElem<GaussRational>,
                             AlgElem<Complex>>;

Ring ring_of_any(const AnyElem& e);

// Convolution of two tagged elements; throws RingMismatch for different rings.
AnyElem convolve(const AnyElem& a, const AnyElem& b);
AnyElem dual_convolve(const AnyElem& f, const AnyElem& a);

}  // namespace semiexp
