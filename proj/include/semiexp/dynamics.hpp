#pragma once

// Expansivity of the shift action S on X_J.
//
// The metric is
//   d(x, y) = max_j sum_i rho(x_j(s_i), y_j(s_i)) / (2^i (1 + rho(...)))
// with s_i the element of table index i-1. Every constant reported here is
// relative to that enumeration.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiexp/duality.hpp"

namespace semiexp {

// rho(a, b) = min(|a - b|, 1 - |a - b|) on representatives in [0, 1).
Rational torus_rho(const Rational& a, const Rational& b);

Rational metric_d(const TorusPoint& x, const TorusPoint& y);

// sup over s in S of d(s.x, s.y); shifted pairs only.
Rational separation(const FiniteSemigroup& s, const TorusPoint& x, const TorusPoint& y);

enum class Decision { Expansive, NonExpansive, Unknown };
enum class Route { RankTheoremA, BruteForce, TorusArc };

const char* to_string(Decision d);
const char* to_string(Route r);

struct ExpansivityReport {
  Decision                  decision = Decision::Unknown;
  Route                     route    = Route::BruteForce;
  std::optional<LeftCover>  cover;
  bool                      annihilator_trivial = false;
  std::size_t               free_rank           = 0;
  std::vector<Integer>      invariant_factors;
  std::optional<Integer>    dual_order;           // |X_J| when finite
  std::optional<Rational>   optimal_constant;     // min separation over distinct pairs
  std::optional<std::pair<TorusPoint, TorusPoint>> optimal_pair;  // attains it
  std::optional<Rational>   theoretical_bound;    // (2^{r+1} ||A||_1)^{-1}
  std::optional<std::size_t> bound_prefix;        // r
  // Witness for NonExpansive: either a nonzero f in J^perp (TorusArc) or a
  // distinct pair with separation 0 (BruteForce).
  std::optional<std::vector<Integer>>                 annihilator_witness;
  std::optional<std::pair<TorusPoint, TorusPoint>>    pair_witness;
  std::string                                         note;
};

// Exact minimum of separation(x, y) over distinct x, y in a finite X_J,
// with a minimizing pair. nullopt when X_J is infinite, has a single point,
// or exceeds `budget`.
struct BruteForceResult {
  Rational                         min_separation;
  std::pair<TorusPoint, TorusPoint> argmin;
  std::size_t                      points = 0;
};

std::optional<BruteForceResult> brute_force_expansivity(const ModulePresentation& j,
                                                        const DualGroupStructure& structure,
                                                        std::size_t budget);

ExpansivityReport decide_expansive(const ModulePresentation& j,
                                   std::size_t budget = kDefaultEnumerationBudget);

// 1-based position of the last element of K in the enumeration.
std::size_t cover_prefix(const ElementSet& k);

// (2^{r+1} ||A||_1)^{-1}. Throws PreconditionViolated if KS != S or A = 0.
Rational theoretical_constant(const ModulePresentation& j, const ElementSet& k);

struct TheoremACounterexample {
  ModulePresentation presentation;  // J = 2 Z[S]: n = 1, A = row of 2 delta_t, Generated
  Element            missed;        // s_K, an element outside SS
  TorusPoint         x;             // 0
  TorusPoint         y;             // 1/2 at s_K, 0 elsewhere
};

// Present exactly when SS != S.
std::optional<TheoremACounterexample> theorem_a_counterexample(const SemigroupRef& s);

}  // namespace semiexp
