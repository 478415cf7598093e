#include "semiexp/invertibility.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace semiexp {

std::optional<TheoremBWitness> theorem_b_witness(const ModulePresentation& j) {
  const auto& sp = j.semigroup();
  auto        e  = solve_left_identity<Rational>(sp);
  if (!e) throw Error(ErrorCode::NoLeftIdentity, "l^1(S) has no left identity");

  std::size_t n   = j.n();
  auto        idm = AlgMat<Rational>::diagonal(*e, n);
  auto        a_q = j.a.cast<Rational>();
  auto        x   = right_solve(a_q, idm);
  if (!x) return std::nullopt;

  Integer m = 1;
  for (std::size_t r = 0; r < x->rows(); ++r) {
    for (std::size_t c = 0; c < x->cols(); ++c) {
      for (const auto& [t, q] : (*x)(r, c).terms()) m = lcm(m, q.get_den());
    }
  }
  for (const auto& [t, q] : e->terms()) m = lcm(m, q.get_den());

  auto mx = Rational(m) * *x;
  auto bq = matrix_multiply(a_q, mx);
  if (!(bq == Rational(m) * idm)) {
    throw Error(ErrorCode::PreconditionViolated, "B differs from m I");
  }
  AlgMat<Integer> b(sp, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& [t, q] : bq(r, c).terms()) {
        if (q.get_den() != 1) throw Error(ErrorCode::PreconditionViolated, "B is not integral");
        b(r, c).set(t, q.get_num());
      }
    }
  }
  auto cm = Rational(1, 1) / Rational(m) * idm;
  if (!(matrix_multiply(bq, cm) == idm)) {
    throw Error(ErrorCode::PreconditionViolated, "B * C differs from I");
  }
  // B Z[S]^n inside A Z[S]^k.
  for (std::size_t col = 0; col < n; ++col) {
    for (Element t = 0; t < j.m(); ++t) {
      auto v = matrix_apply(b, basis_vector(sp, n, col, t));
      if (!module_membership(flatten(v), j)) {
        throw Error(ErrorCode::PreconditionViolated, "a column of B lies outside J");
      }
    }
  }
  return TheoremBWitness{std::move(b), std::move(cm), std::move(*x), m, std::move(idm)};
}

bool module_membership(const std::vector<Integer>& v, const ModulePresentation& j) {
  if (v.size() != j.ambient()) {
    throw Error(ErrorCode::ShapeMismatch, "vector has length " + std::to_string(v.size()) +
                                              ", expected " + std::to_string(j.ambient()));
  }
  // Columns of G are the lattice generators, i.e. the rows of G^T.
  return in_lattice(hermite_normal_form(z_generator_matrix(j).transposed()), v);
}

LaurentElem LaurentElem::make(std::int64_t lo, std::vector<std::int64_t> coeffs) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0) ++first;
  if (first == coeffs.size()) return {};
  std::size_t last = coeffs.size();
  while (coeffs[last - 1] == 0) --last;
  LaurentElem out;
  out.lo = lo + static_cast<std::int64_t>(first);
  out.coeffs.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(first),
                    coeffs.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

const char* to_string(LaurentVerdict v) {
  switch (v) {
    case LaurentVerdict::Invertible: return "Invertible";
    case LaurentVerdict::NotInvertible: return "NotInvertible";
    case LaurentVerdict::Borderline: return "Borderline";
  }
  return "?";
}

namespace {

using LComplex = std::complex<long double>;

LComplex horner(const std::vector<std::int64_t>& p, LComplex z, LComplex* deriv) {
  LComplex v = 0, d = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    d = d * z + v;
    v = v * z + static_cast<long double>(*it);
  }
  if (deriv) *deriv = d;
  return v;
}

// Companion eigenvalues, then a few Newton steps in long double. A step is
// kept only when it does not increase |p|.
std::vector<LComplex> polynomial_roots(const std::vector<std::int64_t>& p) {
  std::size_t d = p.size() - 1;
  if (d == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  double          lead = static_cast<double>(p[d]);
  for (std::size_t i = 0; i < d; ++i) {
    comp(0, static_cast<Eigen::Index>(i)) = -static_cast<double>(p[d - 1 - i]) / lead;
    if (i + 1 < d) comp(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<LComplex>               roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    auto     ev = solver.eigenvalues()[i];
    LComplex z(ev.real(), ev.imag());
    for (int it = 0; it < 8; ++it) {
      LComplex dp;
      LComplex v = horner(p, z, &dp);
      if (std::abs(v) == 0.0L || std::abs(dp) == 0.0L) break;
      LComplex next = z - v / dp;
      if (std::abs(horner(p, next, nullptr)) > std::abs(v)) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

std::vector<LComplex> multiply(const std::vector<LComplex>& a, const std::vector<LComplex>& b) {
  std::vector<LComplex> out(a.size() + b.size() - 1, LComplex(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

}  // namespace

LaurentReport laurent_invertible(const LaurentElem& a, double tau, double tau_strict) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero element is not invertible");
  if (tau_strict < 0) tau_strict = tau / 1000.0;
  LaurentReport rep;
  rep.min_gap = std::numeric_limits<double>::infinity();
  for (const auto& r : polynomial_roots(a.coeffs)) {
    Complex z(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    rep.roots.push_back(z);
    rep.moduli.push_back(static_cast<double>(std::abs(r)));
    rep.min_gap = std::min(rep.min_gap, std::abs(static_cast<double>(std::abs(r)) - 1.0));
  }
  if (rep.min_gap > tau) {
    rep.verdict = LaurentVerdict::Invertible;
  } else if (rep.min_gap <= tau_strict) {
    rep.verdict = LaurentVerdict::NotInvertible;
  } else {
    rep.verdict = LaurentVerdict::Borderline;
  }
  return rep;
}

Rational laurent_residual(const LaurentElem& a, std::int64_t b_lo, const std::vector<Rational>& b) {
  if (a.is_zero() || b.empty()) return Rational(1);
  std::vector<Rational> prod(a.coeffs.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    Rational c(static_cast<long>(a.coeffs[i]));
    for (std::size_t k = 0; k < b.size(); ++k) prod[i + k] += c * b[k];
  }
  std::int64_t lo       = a.lo + b_lo;
  Rational     residual = 0;
  bool         hit_zero = false;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    std::int64_t pos = lo + static_cast<std::int64_t>(i);
    Rational     v   = prod[i];
    if (pos == 0) {
      v -= 1;
      hit_zero = true;
    }
    residual += abs(v);
  }
  if (!hit_zero) residual += 1;
  return residual;
}

LaurentInverse laurent_inverse_truncated(const LaurentElem& a, std::size_t n, double tol) {
  auto rep = laurent_invertible(a);
  if (rep.verdict != LaurentVerdict::Invertible) {
    throw Error(ErrorCode::NotInvertible,
                std::string("symbol has a root near the unit circle (") + to_string(rep.verdict) + ")");
  }
  auto roots = polynomial_roots(a.coeffs);
  long double lead = static_cast<long double>(a.coeffs.back());

  // 1/(z - r) = -sum_{j>=0} z^j / r^{j+1}        for |r| > 1
  //           =  sum_{j>=0} r^j z^{-j-1}          for |r| < 1
  std::vector<LComplex> series{LComplex(1.0L / lead)};
  std::int64_t          lo = -a.lo;
  long double           full = 1, trunc = 1;
  for (const auto& r : roots) {
    std::vector<LComplex> f(n + 1);
    long double           mod = std::abs(r);
    if (mod > 1) {
      LComplex p = -1.0L / r;
      for (std::size_t k = 0; k <= n; ++k, p /= r) f[k] = p;
      long double g = 1.0L / (mod - 1);
      full *= g;
      trunc *= g - std::pow(1.0L / mod, static_cast<long double>(n + 1)) * g;
    } else {
      // Stored highest power first: z^{-n-1} .. z^{-1}.
      LComplex p = 1;
      for (std::size_t k = 0; k <= n; ++k, p *= r) f[n - k] = p;
      lo -= static_cast<std::int64_t>(n + 1);
      long double g = 1.0L / (1 - mod);
      full *= g;
      trunc *= g - std::pow(mod, static_cast<long double>(n + 1)) * g;
    }
    series = multiply(series, f);
  }

  LaurentInverse out;
  out.terms = n;
  out.lo    = lo;
  if (roots.empty()) {
    out.coeffs.push_back(Rational(1) / Rational(static_cast<long>(a.coeffs.front())));
  } else {
    for (const auto& c : series) out.coeffs.emplace_back(static_cast<double>(c.real()));
  }
  long double norm_a = 0;
  for (auto c : a.coeffs) norm_a += std::fabs(static_cast<long double>(c));
  out.claimed_bound = static_cast<double>(norm_a / std::fabs(lead) * (full - trunc));
  out.residual      = laurent_residual(a, out.lo, out.coeffs);
  if (out.residual.get_d() > tol) {
    throw Error(ErrorCode::Budget, "N = " + std::to_string(n) + " reaches residual " +
                                       std::to_string(out.residual.get_d()) + " > tol " +
                                       std::to_string(tol));
  }
  return out;
}

}  // namespace semiexp
