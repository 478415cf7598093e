#pragma once

// Right Z[S]-submodules J = A Z[S]^k of Z[S]^n and their duals
// X_J = { x in (T^S)^n : <x, a> = 0 in T for all a in J }.
//
// Flattening convention, shared by every vector and matrix here: coordinate
// i is major, element index minor, so (i, s) sits at position i*m + s.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semiexp/algebra.hpp"
#include "semiexp/integer_matrix.hpp"
#include "semiexp/numeric.hpp"
#include "semiexp/semigroup.hpp"

namespace semiexp {

// Image: J = A Z[S]^k, the submodule of the algebra image.
// Generated: J = A Z^k + A Z[S]^k, the right submodule generated by the
// columns of A. The two agree when Z[S] has a left identity; they differ
// for instance when SS != S, where A Z[S]^k lives on SS and always has a
// nonzero annihilator.
enum class Span { Image, Generated };

struct ModulePresentation {
  AlgMat<Integer> a;  // n x k
  Span            span = Span::Image;

  [[nodiscard]] const SemigroupRef& semigroup() const noexcept { return a.semigroup(); }
  [[nodiscard]] std::size_t         n() const noexcept { return a.rows(); }
  [[nodiscard]] std::size_t         k() const noexcept { return a.cols(); }
  [[nodiscard]] std::size_t         m() const noexcept { return a.semigroup()->size(); }
  // Ambient Z-rank n*m.
  [[nodiscard]] std::size_t ambient() const noexcept { return n() * m(); }
};

std::vector<Integer> flatten(const AlgVec<Integer>& v);

// Column (j, t) is the flattening of A * (delta_t e_j), at index j*m + t.
// Generated presentations append the k columns A e_j. The columns span J
// over Z.
IntMatrix z_generator_matrix(const ModulePresentation& j);

// Rational basis of J^perp = { f : f^T G = 0 }, each vector of length n*m in
// the flattening order. Empty exactly when J^perp = {0}.
std::vector<std::vector<Rational>> annihilator(const ModulePresentation& j);

// Left kernel basis as integer vectors (each a scaled rational basis vector
// with coprime entries). These are the real directions f with pi(lambda f)
// in X_J for every real lambda.
std::vector<std::vector<Integer>> integral_annihilator(const ModulePresentation& j);

// X_J is isomorphic to (sum_i Z/d_i) + T^free_rank.
struct DualGroupStructure {
  std::vector<Integer> invariant_factors;  // entries > 1 only
  std::size_t          free_rank = 0;
  SmithForm            smith;              // U G V = diag, U and V unimodular

  [[nodiscard]] bool    is_finite() const noexcept { return free_rank == 0; }
  [[nodiscard]] Integer order() const;  // product of the invariant factors
};

DualGroupStructure dual_group_structure(const ModulePresentation& j);

// A point of (T^S)^n with exact coordinates reduced into [0, 1).
class TorusPoint {
 public:
  TorusPoint(std::size_t n, std::size_t m);
  TorusPoint(std::size_t n, std::size_t m, std::vector<Rational> coords);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }

  [[nodiscard]] const Rational&              at(std::size_t i, Element s) const { return coords_[i * m_ + s]; }
  [[nodiscard]] const std::vector<Rational>& coords() const noexcept { return coords_; }
  void                                       set(std::size_t i, Element s, const Rational& v);

  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.coords_ < b.coords_; }

  friend TorusPoint operator-(const TorusPoint& a, const TorusPoint& b);
  friend TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);

 private:
  std::size_t           n_;
  std::size_t           m_;
  std::vector<Rational> coords_;
};

// X_J as integer numerators over a common denominator D (the largest
// invariant factor), for the brute-force engines.
struct ScaledDual {
  std::int64_t                           denominator = 1;
  std::vector<std::vector<std::int64_t>> points;  // sorted lexicographically
};

struct DualEnumeration {
  enum class Status { Complete, Infinite, OverBudget };
  Status                  status = Status::Complete;
  Integer                 order;   // |X_J| when finite
  std::vector<TorusPoint> points;  // sorted lexicographically when Complete
};

inline constexpr std::size_t kDefaultEnumerationBudget = 100000;

DualEnumeration enumerate_dual(const ModulePresentation& j,
                               std::size_t budget = kDefaultEnumerationBudget);

// Same enumeration as enumerate_dual, kept in integer form. Empty optional
// when X_J is infinite or larger than `budget`.
std::optional<ScaledDual> enumerate_dual_scaled(const ModulePresentation& j,
                                                const DualGroupStructure& structure,
                                                std::size_t budget);

TorusPoint from_scaled(const ScaledDual& dual, std::size_t index, std::size_t n, std::size_t m);

// <x, a> = sum_i sum_t x_i(t) a_i(t) mod 1, computed from the canonical lift.
Rational torus_pair(const TorusPoint& x, const AlgVec<Integer>& a);

// x is in X_J iff it pairs to zero with every generator column of J.
bool membership_check(const TorusPoint& x, const ModulePresentation& j);

// (s.x)_i(t) = x_i(ts).
TorusPoint shift(const TorusPoint& x, const FiniteSemigroup& s, Element by);

// The character Phi^{-1}(x) of Z[S]^n, a -> <x, a>.
class Character {
 public:
  Character(SemigroupRef s, TorusPoint x) : sg_(std::move(s)), x_(std::move(x)) {}
  Rational operator()(const AlgVec<Integer>& a) const { return torus_pair(x_, a); }
  [[nodiscard]] const SemigroupRef& semigroup() const noexcept { return sg_; }
  [[nodiscard]] std::size_t         rank() const noexcept { return x_.n(); }

 private:
  SemigroupRef sg_;
  TorusPoint   x_;
};

Character phi_inverse(const SemigroupRef& s, const TorusPoint& x);

// Phi(chi) = (t -> chi(delta_t e_1), ..., t -> chi(delta_t e_n)).
TorusPoint phi(const Character& chi);

// delta_t e_j in Z[S]^n.
AlgVec<Integer> basis_vector(const SemigroupRef& s, std::size_t n, std::size_t j, Element t);

struct PhiRoundTrip {
  Rational value;      // Phi^{-1}(x)(a)
  Rational extracted;  // Phi^{-1}(x)(delta_t e_j), which must equal x_j(t)
};

PhiRoundTrip phi_roundtrip(const SemigroupRef& s, const TorusPoint& x, const AlgVec<Integer>& a,
                           std::size_t j, Element t);

}  // namespace semiexp
