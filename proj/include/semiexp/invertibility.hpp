#pragma once

// Right invertibility witnesses over finite S, and the Laurent case S = Z.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiexp/algebra.hpp"
#include "semiexp/duality.hpp"

namespace semiexp {

struct TheoremBWitness {
  AlgMat<Integer>  b;  // n x n, B = A * (m X) = m I
  AlgMat<Rational> c;  // n x n, B * C = I
  AlgMat<Rational> x;  // k x n, A * X = I
  Integer          m;
  AlgMat<Rational> identity;  // I = diag(e), e the canonical left identity
};

// Throws NoLeftIdentity when l^1(S) has none. nullopt when A * X = I has no
// solution over Q. Every invariant is re-verified before returning.
std::optional<TheoremBWitness> theorem_b_witness(const ModulePresentation& j);

// v in the Z-span of the generator columns of J. v has length n*m.
bool module_membership(const std::vector<Integer>& v, const ModulePresentation& j);

// a = sum_i coeffs[i] delta_{lo + i}; normalized so the end coefficients are
// nonzero (the zero element has no coefficients).
struct LaurentElem {
  std::int64_t              lo = 0;
  std::vector<std::int64_t> coeffs;

  static LaurentElem make(std::int64_t lo, std::vector<std::int64_t> coeffs);
  [[nodiscard]] bool         is_zero() const noexcept { return coeffs.empty(); }
  [[nodiscard]] std::int64_t hi() const noexcept {
    return lo + static_cast<std::int64_t>(coeffs.size()) - 1;
  }
};

enum class LaurentVerdict { Invertible, NotInvertible, Borderline };
const char* to_string(LaurentVerdict v);

struct LaurentReport {
  LaurentVerdict       verdict = LaurentVerdict::Invertible;
  std::vector<Complex> roots;    // of z^{-lo} a(z)
  std::vector<double>  moduli;
  double               min_gap;  // min | |root| - 1 |, +inf without roots
};

inline constexpr double kDefaultRootTolerance = 1e-9;

// Invertible when every root is more than tau from the circle, NotInvertible
// when some root is within tau_strict of it, Borderline in between. A
// negative tau_strict means tau / 1000. Throws ZeroElement.
LaurentReport laurent_invertible(const LaurentElem& a, double tau = kDefaultRootTolerance,
                                 double tau_strict = -1.0);

struct LaurentInverse {
  std::int64_t          lo = 0;
  std::vector<Rational> coeffs;          // b_N, exact values of the computed doubles
  std::size_t           terms = 0;       // N
  Rational              residual;        // ||a * b_N - delta_0||_1, exact for b_N
  double                claimed_bound;   // a priori truncation bound
};

// Truncated l^1 inverse: one geometric series per root, N + 1 terms each,
// multiplied out. Throws NotInvertible unless laurent_invertible says
// Invertible, and Budget when the residual exceeds tol.
LaurentInverse laurent_inverse_truncated(const LaurentElem& a, std::size_t n, double tol);

// Exact ||a * b - delta_0||_1 for a window b starting at b_lo.
Rational laurent_residual(const LaurentElem& a, std::int64_t b_lo, const std::vector<Rational>& b);

}  // namespace semiexp
