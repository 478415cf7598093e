#pragma once

// Test-side tables, random generators and independent oracles. The oracles
// use dense vectors and direct formulas and share no code with the library
// beyond the semigroup table lookup.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "semiexp/commands.hpp"
#include "semiexp/constructions.hpp"
#include "semiexp/dynamics.hpp"
#include "semiexp/error.hpp"
#include "semiexp/invertibility.hpp"

namespace tsupport {

using namespace semiexp;

inline SemigroupRef from_rule(std::size_t m, const std::function<std::size_t(std::size_t, std::size_t)>& f) {
  RawTable t(m, std::vector<std::int64_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) t[a][b] = static_cast<std::int64_t>(f(a, b));
  }
  return validate_table(m, t);
}

inline SemigroupRef zn(std::size_t m) {
  return from_rule(m, [m](auto a, auto b) { return (a + b) % m; });
}
inline SemigroupRef right_zero(std::size_t m) {
  return from_rule(m, [](auto, auto b) { return b; });
}
inline SemigroupRef left_zero(std::size_t m) {
  return from_rule(m, [](auto a, auto) { return a; });
}
inline SemigroupRef null_sg(std::size_t m) {
  return from_rule(m, [](auto, auto) { return std::size_t{0}; });
}
inline SemigroupRef tmin(std::size_t m) {
  return from_rule(m, [](auto a, auto b) { return std::min(a, b); });
}

inline ReesSpec rees(SemigroupRef g, std::size_t ni, std::size_t nl,
                     std::vector<std::vector<std::optional<Element>>> p) {
  return ReesSpec{std::move(g), ni, nl, std::move(p)};
}

// Dense oracles ---------------------------------------------------------------

using Dense = std::vector<Rational>;

inline Dense dense(const AlgElem<Rational>& a) {
  Dense out(a.dim(), Rational(0));
  for (const auto& [t, c] : a.terms()) out[t] = c;
  return out;
}

inline Dense dense_convolve(const FiniteSemigroup& s, const Dense& a, const Dense& b) {
  Dense out(s.size(), Rational(0));
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (std::size_t t = 0; t < s.size(); ++t) out[s.product(r, t)] += a[r] * b[t];
  }
  return out;
}

inline Dense dense_dual_convolve(const FiniteSemigroup& s, const Dense& f, const Dense& a) {
  Dense out(s.size(), Rational(0));
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t t = 0; t < s.size(); ++t) out[x] += f[s.product(t, x)] * a[t];
  }
  return out;
}

inline Rational dense_pair(const Dense& f, const Dense& a) {
  Rational acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * a[i];
  return acc;
}

// rho on R/Z via floor, independent of the library's frac.
inline Rational circle_dist(const Rational& a, const Rational& b) {
  Rational d = a - b;
  Integer  fl;
  mpz_fdiv_q(fl.get_mpz_t(), d.get_num_mpz_t(), d.get_den_mpz_t());
  d -= Rational(fl);
  Rational e = Rational(1) - d;
  return d < e ? d : e;
}

// Flattened points, coordinate (i, s) at i*m + s.
inline Rational naive_metric(std::size_t n, std::size_t m, const Dense& x, const Dense& y) {
  Rational best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational sum    = 0;
    Rational weight = Rational(1, 2);
    for (std::size_t s = 0; s < m; ++s, weight /= 2) {
      Rational r = circle_dist(x[i * m + s], y[i * m + s]);
      sum += weight * r / (1 + r);
    }
    best = std::max(best, sum);
  }
  return best;
}

inline Dense naive_shift(const FiniteSemigroup& s, std::size_t n, const Dense& x, std::size_t by) {
  std::size_t m = s.size();
  Dense       out(x.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < m; ++t) out[i * m + t] = x[i * m + s.product(t, by)];
  }
  return out;
}

inline Rational naive_separation(const FiniteSemigroup& s, std::size_t n, const Dense& x, const Dense& y) {
  Rational best = 0;
  for (std::size_t e = 0; e < s.size(); ++e) {
    best = std::max(best, naive_metric(n, s.size(), naive_shift(s, n, x, e), naive_shift(s, n, y, e)));
  }
  return best;
}

// Generators of J as dense integer vectors, built with dense convolution:
// A * delta_t e_j for every (j, t), plus A e_j for Generated presentations.
inline std::vector<Dense> dense_generators(const ModulePresentation& j) {
  const auto&        s = *j.semigroup();
  std::size_t        m = s.size();
  std::vector<Dense> out;
  auto               column = [&](std::size_t col, const Dense* right) {
    Dense v(j.n() * m, Rational(0));
    for (std::size_t i = 0; i < j.n(); ++i) {
      Dense a = dense(j.a(i, col).cast<Rational>());
      Dense r = right ? dense_convolve(s, a, *right) : a;
      for (std::size_t u = 0; u < m; ++u) v[i * m + u] = r[u];
    }
    return v;
  };
  for (std::size_t col = 0; col < j.k(); ++col) {
    for (std::size_t t = 0; t < m; ++t) {
      Dense d(m, Rational(0));
      d[t] = 1;
      out.push_back(column(col, &d));
    }
    if (j.span == Span::Generated) out.push_back(column(col, nullptr));
  }
  return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Every point of ((1/D)Z/Z)^{nm} that pairs integrally with each generator.
inline std::vector<Dense> grid_dual(const ModulePresentation& j, std::int64_t d) {
  auto               gens = dense_generators(j);
  std::size_t        dim  = j.ambient();
  std::vector<Dense> out;
  std::vector<std::int64_t> digits(dim, 0);
  for (;;) {
    Dense x(dim);
    for (std::size_t c = 0; c < dim; ++c) x[c] = Rational(digits[c], d), x[c].canonicalize();
    bool ok = true;
    for (const auto& g : gens) {
      if (!is_integer(dense_pair(x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
    std::size_t pos = 0;
    while (pos < dim && ++digits[pos] == d) digits[pos++] = 0;
    if (pos == dim) break;
  }
  return out;
}

// Minimum separation over all distinct ordered pairs.
inline std::optional<Rational> pairwise_min_separation(const FiniteSemigroup& s, std::size_t n,
                                                       const std::vector<Dense>& pts) {
  std::optional<Rational> best;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Rational v = naive_separation(s, n, pts[a], pts[b]);
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

// Random inputs ---------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t span = 5, std::int64_t max_den = 4) {
  Rational q(uniform(rng, -span, span), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

// Random associative table: picks from a pool of constructions on m <= 8.
inline SemigroupRef random_semigroup(Rng& rng, std::size_t max_m = 8) {
  switch (uniform(rng, 0, 6)) {
    case 0: return zn(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_m))));
    case 1: return right_zero(static_cast<std::size_t>(uniform(rng, 1, 4)));
    case 2: return left_zero(static_cast<std::size_t>(uniform(rng, 1, 4)));
    case 3: return null_sg(static_cast<std::size_t>(uniform(rng, 1, 4)));
    case 4: return tmin(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_m))));
    case 5: return direct_product(*zn(2), *right_zero(static_cast<std::size_t>(uniform(rng, 1, 4))));
    default: {
      // Rees semigroup over Z/2 with |I| = |Lambda| = 1 or a 2x1 shape.
      std::size_t ni = static_cast<std::size_t>(uniform(rng, 1, 2));
      std::vector<std::vector<std::optional<Element>>> p(1, std::vector<std::optional<Element>>(ni));
      for (auto& e : p[0]) {
        auto v = uniform(rng, 0, 2);
        if (v < 2) e = static_cast<Element>(v);
      }
      return rees_build(rees(zn(2), ni, 1, p));
    }
  }
}

template <class C>
AlgElem<C> random_elem(Rng& rng, const SemigroupRef& s, std::size_t support,
                       const std::function<C(Rng&)>& coeff) {
  AlgElem<C> out(s);
  for (std::size_t i = 0; i < support; ++i) {
    out.add(static_cast<Element>(uniform(rng, 0, static_cast<std::int64_t>(s->size()) - 1)), coeff(rng));
  }
  return out;
}

inline AlgElem<Rational> random_rat_elem(Rng& rng, const SemigroupRef& s) {
  return random_elem<Rational>(rng, s, static_cast<std::size_t>(uniform(rng, 0, 4)),
                               [](Rng& r) { return random_rational(r); });
}

inline AlgElem<Integer> random_int_elem(Rng& rng, const SemigroupRef& s, std::size_t max_support,
                                        std::int64_t span) {
  return random_elem<Integer>(rng, s, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_support))),
                              [span](Rng& r) { return Integer(static_cast<long>(uniform(r, -span, span))); });
}

inline AlgMat<Integer> random_int_matrix(Rng& rng, const SemigroupRef& s, std::size_t n, std::size_t k,
                                         std::size_t max_support = 2, std::int64_t span = 2) {
  AlgMat<Integer> a(s, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = random_int_elem(rng, s, max_support, span);
  }
  return a;
}

}  // namespace tsupport
