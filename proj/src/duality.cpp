#include "semiexp/duality.hpp"

#include <algorithm>
#include <numeric>

#include "semiexp/linear.hpp"

namespace semiexp {

std::vector<Integer> flatten(const AlgVec<Integer>& v) {
  if (v.empty()) return {};
  std::size_t          m = v.front().dim();
  std::vector<Integer> out(v.size() * m);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& [t, c] : v[i].terms()) out[i * m + t] = c;
  }
  return out;
}

IntMatrix z_generator_matrix(const ModulePresentation& j) {
  const auto& s = *j.semigroup();
  std::size_t m = j.m(), n = j.n(), k = j.k();
  bool        extra = j.span == Span::Generated;
  IntMatrix   g(n * m, k * m + (extra ? k : 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t col = 0; col < k; ++col) {
      for (const auto& [r, c] : j.a(i, col).terms()) {
        for (Element t = 0; t < m; ++t) g(i * m + s.product(r, t), col * m + t) += c;
        if (extra) g(i * m + r, k * m + col) += c;
      }
    }
  }
  return g;
}

std::vector<std::vector<Rational>> annihilator(const ModulePresentation& j) {
  IntMatrix             g = z_generator_matrix(j);
  DenseMatrix<Rational> gt(g.cols(), std::vector<Rational>(g.rows()));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) gt[c][r] = Rational(g(r, c));
  }
  return nullspace(gt, g.rows());
}

std::vector<std::vector<Integer>> integral_annihilator(const ModulePresentation& j) {
  std::vector<std::vector<Integer>> out;
  for (const auto& f : annihilator(j)) {
    Integer den = 1;
    for (const auto& q : f) den = lcm(den, q.get_den());
    std::vector<Integer> v(f.size());
    Integer              g = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Rational scaled = f[i] * Rational(den);
      v[i]            = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (g > 1) {
      for (auto& x : v) x /= g;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Integer DualGroupStructure::order() const {
  Integer p = 1;
  for (const auto& d : invariant_factors) p *= d;
  return p;
}

DualGroupStructure dual_group_structure(const ModulePresentation& j) {
  DualGroupStructure out;
  out.smith = smith_normal_form(z_generator_matrix(j));
  for (const auto& d : out.smith.diagonal) {
    if (d > 1) out.invariant_factors.push_back(d);
  }
  out.free_rank = j.ambient() - out.smith.rank();
  return out;
}

TorusPoint::TorusPoint(std::size_t n, std::size_t m) : n_(n), m_(m), coords_(n * m, Rational(0)) {}

TorusPoint::TorusPoint(std::size_t n, std::size_t m, std::vector<Rational> coords)
    : n_(n), m_(m), coords_(std::move(coords)) {
  if (coords_.size() != n * m) {
    throw Error(ErrorCode::ShapeMismatch, "torus point needs " + std::to_string(n * m) +
                                              " coordinates, got " +
                                              std::to_string(coords_.size()));
  }
  for (auto& c : coords_) c = frac(c);
}

void TorusPoint::set(std::size_t i, Element s, const Rational& v) { coords_[i * m_ + s] = frac(v); }

bool TorusPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

TorusPoint operator-(const TorusPoint& a, const TorusPoint& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) throw Error(ErrorCode::ShapeMismatch, "torus points differ in shape");
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return TorusPoint(a.n_, a.m_, std::move(c));
}

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) throw Error(ErrorCode::ShapeMismatch, "torus points differ in shape");
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return TorusPoint(a.n_, a.m_, std::move(c));
}

std::optional<ScaledDual> enumerate_dual_scaled(const ModulePresentation& j,
                                                const DualGroupStructure& st, std::size_t budget) {
  if (!st.is_finite() || st.order() > budget) return std::nullopt;
  std::size_t dim = j.ambient();
  ScaledDual  out;
  out.denominator = st.invariant_factors.empty() ? 1 : to_int64(st.invariant_factors.back());
  const auto D    = out.denominator;

  // X_J = U^T (prod_i (1/d_i)Z / Z): row i of U contributes c_i/d_i.
  // Rows with d_i = 1 contribute nothing.
  struct Generator {
    std::int64_t              modulus;
    std::vector<std::int64_t> step;  // U row times D/d_i, reduced mod D
  };
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < st.smith.rank(); ++i) {
    const Integer& d = st.smith.diagonal[i];
    if (d == 1) continue;
    Generator g{to_int64(d), std::vector<std::int64_t>(dim)};
    Integer   scale = Integer(D) / d;
    for (std::size_t c = 0; c < dim; ++c) {
      Integer v = st.smith.left(i, c) * scale;
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Integer(D).get_mpz_t());
      g.step[c] = to_int64(r);
    }
    gens.push_back(std::move(g));
  }

  std::vector<std::int64_t> point(dim, 0);
  std::vector<std::int64_t> digits(gens.size(), 0);
  for (;;) {
    out.points.push_back(point);
    // Mixed-radix increment over the cyclic factors.
    std::size_t pos = 0;
    while (pos < gens.size()) {
      ++digits[pos];
      for (std::size_t c = 0; c < dim; ++c) point[c] = (point[c] + gens[pos].step[c]) % D;
      if (digits[pos] < gens[pos].modulus) break;
      digits[pos] = 0;  // wrapped: point is back to its value before this digit moved
      ++pos;
    }
    if (pos == gens.size()) break;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

TorusPoint from_scaled(const ScaledDual& dual, std::size_t index, std::size_t n, std::size_t m) {
  std::vector<Rational> c(n * m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = Rational(dual.points[index][i], dual.denominator);
    c[i].canonicalize();
  }
  return TorusPoint(n, m, std::move(c));
}

DualEnumeration enumerate_dual(const ModulePresentation& j, std::size_t budget) {
  DualEnumeration out;
  auto            st = dual_group_structure(j);
  if (!st.is_finite()) {
    out.status = DualEnumeration::Status::Infinite;
    return out;
  }
  out.order = st.order();
  auto scaled = enumerate_dual_scaled(j, st, budget);
  if (!scaled) {
    out.status = DualEnumeration::Status::OverBudget;
    return out;
  }
  out.points.reserve(scaled->points.size());
  for (std::size_t p = 0; p < scaled->points.size(); ++p) {
    out.points.push_back(from_scaled(*scaled, p, j.n(), j.m()));
  }
  return out;
}

Rational torus_pair(const TorusPoint& x, const AlgVec<Integer>& a) {
  if (a.size() != x.n()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(x.n()) +
                                                  " coordinates, vector has " +
                                                  std::to_string(a.size()));
  }
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].dim() != x.m()) throw Error(ErrorCode::DimensionMismatch, "semigroup size mismatch");
    for (const auto& [t, c] : a[i].terms()) acc += x.at(i, t) * Rational(c);
  }
  return frac(acc);
}

bool membership_check(const TorusPoint& x, const ModulePresentation& j) {
  if (x.n() != j.n() || x.m() != j.m()) {
    throw Error(ErrorCode::DimensionMismatch, "point shape does not match the presentation");
  }
  IntMatrix g = z_generator_matrix(j);
  for (std::size_t c = 0; c < g.cols(); ++c) {
    Rational acc(0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (sgn(g(r, c)) != 0) acc += x.coords()[r] * Rational(g(r, c));
    }
    if (sgn(frac(acc)) != 0) return false;
  }
  return true;
}

TorusPoint shift(const TorusPoint& x, const FiniteSemigroup& s, Element by) {
  if (x.m() != s.size()) throw Error(ErrorCode::ShapeMismatch, "point and semigroup sizes differ");
  TorusPoint out(x.n(), x.m());
  for (std::size_t i = 0; i < x.n(); ++i) {
    for (Element t = 0; t < x.m(); ++t) out.set(i, t, x.at(i, s.product(t, by)));
  }
  return out;
}

Character phi_inverse(const SemigroupRef& s, const TorusPoint& x) {
  if (x.m() != s->size()) throw Error(ErrorCode::ShapeMismatch, "point and semigroup sizes differ");
  return Character(s, x);
}

AlgVec<Integer> basis_vector(const SemigroupRef& s, std::size_t n, std::size_t j, Element t) {
  AlgVec<Integer> v(n, AlgElem<Integer>(s));
  v.at(j).set(t, Integer(1));
  return v;
}

TorusPoint phi(const Character& chi) {
  std::size_t n = chi.rank(), m = chi.semigroup()->size();
  TorusPoint  out(n, m);
  for (std::size_t j = 0; j < n; ++j) {
    for (Element t = 0; t < m; ++t) out.set(j, t, chi(basis_vector(chi.semigroup(), n, j, t)));
  }
  return out;
}

PhiRoundTrip phi_roundtrip(const SemigroupRef& s, const TorusPoint& x, const AlgVec<Integer>& a,
                           std::size_t j, Element t) {
  Character chi = phi_inverse(s, x);
  return {chi(a), chi(basis_vector(s, x.n(), j, t))};
}

}  // namespace semiexp
