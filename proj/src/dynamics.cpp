#include "semiexp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semiexp {

Rational torus_rho(const Rational& a, const Rational& b) {
  Rational diff = abs(frac(a) - frac(b));
  Rational wrap = Rational(1) - diff;
  return diff < wrap ? diff : wrap;
}

Rational metric_d(const TorusPoint& x, const TorusPoint& y) {
  if (x.n() != y.n() || x.m() != y.m()) {
    throw Error(ErrorCode::ShapeMismatch, "metric_d: points differ in shape");
  }
  Rational best(0);
  for (std::size_t j = 0; j < x.n(); ++j) {
    Rational sum(0);
    for (Element s = 0; s < x.m(); ++s) {
      Rational rho = torus_rho(x.at(j, s), y.at(j, s));
      if (sgn(rho) == 0) continue;
      sum += rho / (pow2(static_cast<unsigned>(s + 1)) * (Rational(1) + rho));
    }
    if (best < sum) best = sum;
  }
  return best;
}

Rational separation(const FiniteSemigroup& s, const TorusPoint& x, const TorusPoint& y) {
  if (x.n() != y.n() || x.m() != y.m()) {
    throw Error(ErrorCode::ShapeMismatch, "separation: points differ in shape");
  }
  Rational best(0);
  for (Element e = 0; e < s.size(); ++e) {
    Rational d = metric_d(shift(x, s, e), shift(y, s, e));
    if (best < d) best = d;
  }
  return best;
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Expansive: return "Expansive";
    case Decision::NonExpansive: return "NonExpansive";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Route r) {
  switch (r) {
    case Route::RankTheoremA: return "RankTheoremA";
    case Route::BruteForce: return "BruteForce";
    case Route::TorusArc: return "TorusArc";
  }
  return "?";
}

std::optional<BruteForceResult> brute_force_expansivity(const ModulePresentation& j,
                                                        const DualGroupStructure& structure,
                                                        std::size_t budget) {
  auto dual = enumerate_dual_scaled(j, structure, budget);
  if (!dual || dual->points.size() < 2) return std::nullopt;

  const auto&  s = *j.semigroup();
  std::size_t  n = j.n(), m = j.m();
  std::int64_t D = dual->denominator;

  // d is translation invariant and each shift is a group endomorphism, so
  // separation(x, y) = separation(x - y, 0); the minimum over distinct pairs
  // is the minimum over nonzero points against 0.
  //
  // Screen in floating point, then settle every near-minimal candidate
  // exactly. Float error here is ~1e-15 relative, far inside the band.
  std::vector<double> g(static_cast<std::size_t>(D));
  for (std::int64_t c = 0; c < D; ++c) {
    double cp = static_cast<double>(std::min(c, D - c));
    g[static_cast<std::size_t>(c)] = cp / (static_cast<double>(D) + cp);
  }
  std::vector<double> weight(m);
  for (std::size_t t = 0; t < m; ++t) weight[t] = std::ldexp(1.0, -static_cast<int>(t + 1));

  std::vector<double> approx(dual->points.size(), std::numeric_limits<double>::infinity());
  double              best = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < dual->points.size(); ++p) {
    const auto& x = dual->points[p];
    if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) continue;
    double sep = 0.0;
    for (Element e = 0; e < m; ++e) {
      for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (Element t = 0; t < m; ++t) {
          sum += weight[t] * g[static_cast<std::size_t>(x[i * m + s.product(t, e)])];
        }
        sep = std::max(sep, sum);
      }
    }
    approx[p] = sep;
    best      = std::min(best, sep);
  }

  double                          band = best * (1.0 + 1e-9) + 1e-300;
  std::optional<BruteForceResult> out;
  TorusPoint                      zero(n, m);
  for (std::size_t p = 0; p < dual->points.size(); ++p) {
    if (approx[p] > band) continue;
    TorusPoint x   = from_scaled(*dual, p, n, m);
    Rational   sep = separation(s, x, zero);
    if (!out || sep < out->min_separation) {
      out = BruteForceResult{sep, {x, zero}, dual->points.size()};
    }
  }
  return out;
}

std::size_t cover_prefix(const ElementSet& k) {
  return k.empty() ? 0 : *std::max_element(k.begin(), k.end()) + 1;
}

Rational theoretical_constant(const ModulePresentation& j, const ElementSet& k) {
  if (!is_left_cover(*j.semigroup(), k)) {
    throw Error(ErrorCode::PreconditionViolated, "theoretical_constant requires KS = S");
  }
  if (j.a.is_zero()) {
    throw Error(ErrorCode::PreconditionViolated, "theoretical_constant requires A != 0");
  }
  auto r = static_cast<unsigned>(cover_prefix(k));
  return Rational(1) / (pow2(r + 1) * l1_norm(j.a));
}

ExpansivityReport decide_expansive(const ModulePresentation& j, std::size_t budget) {
  ExpansivityReport rep;
  auto              st  = dual_group_structure(j);
  rep.free_rank         = st.free_rank;
  rep.invariant_factors = st.invariant_factors;
  rep.cover             = minimal_left_cover(*j.semigroup());

  if (st.free_rank > 0) {
    // pi(lambda f) lies in X_J for every real lambda and tends to 0.
    rep.decision            = Decision::NonExpansive;
    rep.route               = Route::TorusArc;
    rep.annihilator_trivial = false;
    rep.annihilator_witness = integral_annihilator(j).front();
    rep.note                = "J^perp is nontrivial; the arc pi(lambda f) lies in X_J";
    return rep;
  }

  rep.annihilator_trivial = true;
  rep.dual_order          = st.order();
  if (rep.cover && !j.a.is_zero()) {
    rep.bound_prefix      = cover_prefix(rep.cover->elements);
    rep.theoretical_bound = theoretical_constant(j, rep.cover->elements);
  }
  auto bf = brute_force_expansivity(j, st, budget);

  if (rep.cover) {
    rep.decision = Decision::Expansive;
    rep.route    = Route::RankTheoremA;
    if (bf) {
      rep.optimal_constant = bf->min_separation;
      rep.optimal_pair     = bf->argmin;
    }
    rep.note = "KS = S and J^perp = {0}";
    return rep;
  }

  rep.route = Route::BruteForce;
  if (st.order() == 1) {
    rep.decision = Decision::Expansive;
    rep.note     = "X_J is a single point";
  } else if (!bf) {
    rep.decision = Decision::Unknown;
    rep.note     = "SS != S and |X_J| exceeds the enumeration budget";
  } else if (sgn(bf->min_separation) > 0) {
    rep.decision         = Decision::Expansive;
    rep.optimal_constant = bf->min_separation;
    rep.optimal_pair     = bf->argmin;
    rep.note             = "SS != S; every distinct pair separates";
  } else {
    rep.decision         = Decision::NonExpansive;
    rep.optimal_constant = bf->min_separation;
    rep.pair_witness     = bf->argmin;
    rep.note         = "SS != S; a distinct pair never separates";
  }
  return rep;
}

std::optional<TheoremACounterexample> theorem_a_counterexample(const SemigroupRef& sp) {
  const auto& s      = *sp;
  ElementSet  square = product_set(s, all_elements(s), all_elements(s));
  if (square.size() == s.size()) return std::nullopt;
  Element missed = 0;
  while (std::binary_search(square.begin(), square.end(), missed)) ++missed;

  std::size_t     m = s.size();
  AlgMat<Integer> a(sp, 1, m);
  for (Element t = 0; t < m; ++t) a(0, t).set(t, Integer(2));
  TorusPoint y(1, m);
  y.set(0, missed, Rational(1, 2));
  return TheoremACounterexample{ModulePresentation{std::move(a), Span::Generated}, missed, TorusPoint(1, m), y};
}

}  // namespace semiexp
