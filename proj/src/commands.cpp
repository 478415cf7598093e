#include "semiexp/commands.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "semiexp/error.hpp"

namespace semiexp {

using io::json;

namespace {

json optional_elem(const std::optional<AlgElem<Rational>>& e) {
  return e ? io::element_to_json(*e) : json(nullptr);
}

// analyze -------------------------------------------------------------------

CommandResult run_analyze(const json& input) {
  auto s     = io::semigroup_from_json(input);
  auto flags = classify(*s);
  json res;
  res["semigroup"]       = io::semigroup_to_json(*s);
  res["flags"]           = io::flags_to_json(flags);
  res["SS_equals_S"]     = is_expansive_semigroup(*s);
  auto cover             = minimal_left_cover(*s);
  res["cover"]           = cover ? json{{"elements", cover->elements}, {"minimal", cover->minimal}} : json(nullptr);
  if (cover) {
    auto f                  = reduce_to_idempotents(*s, cover->elements);
    res["idempotent_cover"] = f ? json(*f) : json(nullptr);
  } else {
    res["idempotent_cover"] = nullptr;
  }
  res["left_identity"]      = optional_elem(solve_left_identity<Rational>(s));
  res["two_sided_identity"] = optional_elem(solve_left_identity<Rational>(s, true));
  if (flags.is_inverse) res["inverse_identity"] = io::element_to_json(inverse_semigroup_identity(s));
  if (auto ce = theorem_a_counterexample(s)) {
    res["counterexample"] = {{"missed", ce->missed},
                             {"A", io::matrix_to_json(ce->presentation.a)},
                             {"module", "generated"},
                             {"x", io::point_to_json(ce->x)},
                             {"y", io::point_to_json(ce->y)}};
  }
  return {{{"command", "analyze"}, {"input", input}, {"result", std::move(res)}}, 0};
}

// action / theoremb -----------------------------------------------------------

CommandResult run_action(const json& input, const CommandOptions& opt) {
  auto j   = io::presentation_from_json(input);
  auto rep = decide_expansive(j, opt.budget);
  int  st  = rep.decision == Decision::Unknown ? 2 : 0;
  return {{{"command", "action"}, {"input", input}, {"result", io::report_to_json(rep)}}, st};
}

CommandResult run_theoremb(const json& input) {
  auto j = io::presentation_from_json(input);
  json res;
  try {
    auto w = theorem_b_witness(j);
    if (w) {
      res           = io::witness_to_json(*w);
      res["present"] = true;
    } else {
      res = {{"present", false}, {"reason", "A * X = I has no solution over Q"}};
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoLeftIdentity) throw;
    res = {{"present", false}, {"reason", "NoLeftIdentity"}};
  }
  return {{{"command", "theoremb"}, {"input", input}, {"result", std::move(res)}}, 0};
}

// constructions ---------------------------------------------------------------

// "P": "random" draws each entry from G^0 (zero with probability 1/3) using
// the seed; the report carries the drawn matrix.
json materialize_rees(const json& raw, std::uint64_t seed) {
  if (!raw.is_object() || !raw.contains("P") || raw.at("P") != "random") return raw;
  json                                       input = raw;
  auto                                       g     = io::semigroup_from_json(raw.at("group"));
  std::size_t                                ni    = raw.at("I").get<std::size_t>();
  std::size_t                                nl    = raw.at("Lambda").get<std::size_t>();
  std::mt19937_64                            rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 3 * g->size() - 1);
  json                                       p = json::array();
  for (std::size_t l = 0; l < nl; ++l) {
    json row = json::array();
    for (std::size_t i = 0; i < ni; ++i) {
      std::size_t v = pick(rng);
      row.push_back(v < g->size() ? json(nullptr) : json((v - g->size()) / 2));
    }
    p.push_back(std::move(row));
  }
  input["P"] = std::move(p);
  return input;
}

CommandResult run_rees(const json& raw, const CommandOptions& opt) {
  json input = materialize_rees(raw, opt.seed);
  auto spec  = io::rees_from_json(input);
  auto s    = rees_build(spec);
  auto rep  = rees_report(spec);
  json res;
  res["semigroup"]        = io::semigroup_to_json(*s);
  res["expansive"]        = rep.expansive;
  res["idempotent_cover"] = rep.idempotent_cover;
  res["unital_l1"]        = rep.unital_l1;
  if (spec.i_size == spec.lambda_size) {
    res["determinant"] = io::integer_to_json(determinant(rees_block_matrix(spec)));
  }
  res["two_sided_identity"] = optional_elem(solve_left_identity<Rational>(s, true));
  return {{{"command", "rees"}, {"input", input}, {"result", std::move(res)}}, 0};
}

CommandResult run_union(const json& input) {
  auto u = union_build(io::union_from_json(input));
  json res;
  res["semigroup"]     = io::semigroup_to_json(*u.semigroup);
  res["offsets"]       = u.offsets;
  res["left_identity"] = optional_elem(u.left_identity);
  return {{{"command", "union"}, {"input", input}, {"result", std::move(res)}}, 0};
}

CommandResult run_family(const json& input) {
  auto s = io::semigroup_from_json(input);
  json res;
  res["semigroup"] = io::semigroup_to_json(*s);
  res["flags"]     = io::flags_to_json(classify(*s));
  return {{{"command", "family"}, {"input", input}, {"result", std::move(res)}}, 0};
}

// laurent ---------------------------------------------------------------------

CommandResult run_laurent(const json& input) {
  auto        a   = io::laurent_from_json(input);
  std::size_t n   = input.value("N", std::size_t{30});
  double      tol = input.value("tol", 1e-6);
  auto        rep = laurent_invertible(a, input.value("tau", kDefaultRootTolerance));
  json        res;
  res["verdict"] = to_string(rep.verdict);
  json roots     = json::array();
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    roots.push_back({{"re", rep.roots[i].real()}, {"im", rep.roots[i].imag()}, {"modulus", rep.moduli[i]}});
  }
  res["roots"] = std::move(roots);
  if (!rep.roots.empty()) res["min_gap"] = rep.min_gap;
  if (rep.verdict == LaurentVerdict::Invertible) {
    try {
      auto inv       = laurent_inverse_truncated(a, n, tol);
      json coeffs    = json::array();
      for (const auto& c : inv.coeffs) coeffs.push_back(io::rational_to_json(c));
      res["inverse"] = {{"lo", inv.lo},
                        {"coeffs", std::move(coeffs)},
                        {"N", inv.terms},
                        {"tol", tol},
                        {"residual", io::rational_to_json(inv.residual)},
                        {"residual_value", inv.residual.get_d()},
                        {"claimed_bound", inv.claimed_bound}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
      res["inverse"] = {{"error", e.what()}};
    }
  }
  int st = rep.verdict == LaurentVerdict::Borderline ? 2 : 0;
  return {{{"command", "laurent"}, {"input", input}, {"result", std::move(res)}}, st};
}

// verification ----------------------------------------------------------------

struct Checker {
  VerifyOutcome out;
  void          check(bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) out.failures.push_back(what);
  }
};

std::optional<AlgElem<Rational>> read_elem(const json& j, const SemigroupRef& s) {
  if (j.is_null()) return std::nullopt;
  return io::typed_element_from_json<Rational>(j, s);
}

void check_left_identity(Checker& c, const AlgElem<Rational>& e, bool two_sided, const std::string& tag) {
  const auto& s = e.semigroup();
  bool        ok = true;
  for (Element x = 0; x < s->size(); ++x) {
    auto d = AlgElem<Rational>::delta(s, x);
    ok     = ok && convolve(e, d) == d && (!two_sided || convolve(d, e) == d);
  }
  c.check(ok, tag + " is not an identity");
}

void check_table(Checker& c, const json& reported, const SemigroupRef& expected) {
  auto s = io::semigroup_from_json(reported);
  c.check(*s == *expected, "reported table differs from the construction");
}

bool pair_in_dual(const std::pair<TorusPoint, TorusPoint>& p, const ModulePresentation& j) {
  return membership_check(p.first, j) && membership_check(p.second, j);
}

std::pair<TorusPoint, TorusPoint> read_pair(const json& j, const ModulePresentation& pres) {
  return {io::point_from_json(j.at(0), pres.n(), pres.m()), io::point_from_json(j.at(1), pres.n(), pres.m())};
}

void verify_action(Checker& c, const json& input, const json& r) {
  auto j = io::presentation_from_json(input);
  auto g = z_generator_matrix(j);
  if (r.contains("annihilator_witness")) {
    auto f = io::integer_vector_from_json(r.at("annihilator_witness"));
    c.check(f.size() == g.rows(), "annihilator witness has the wrong length");
    bool nonzero = false, kills = f.size() == g.rows();
    for (const auto& v : f) nonzero = nonzero || sgn(v) != 0;
    for (std::size_t col = 0; kills && col < g.cols(); ++col) {
      Integer acc = 0;
      for (std::size_t row = 0; row < g.rows(); ++row) acc += f[row] * g(row, col);
      kills = sgn(acc) == 0;
    }
    c.check(nonzero, "annihilator witness is zero");
    c.check(kills, "annihilator witness does not kill J");
  }
  if (r.contains("witness_pair")) {
    auto p = read_pair(r.at("witness_pair"), j);
    c.check(pair_in_dual(p, j), "witness pair is not in X_J");
    c.check(!(p.first == p.second), "witness pair is not distinct");
    c.check(sgn(separation(*j.semigroup(), p.first, p.second)) == 0, "witness pair separates");
  }
  std::optional<ElementSet> cover;
  if (r.contains("cover")) {
    cover = r.at("cover").at("elements").get<ElementSet>();
    c.check(is_left_cover(*j.semigroup(), *cover), "cover K fails KS = S");
  }
  if (r.value("route", "") == "RankTheoremA") {
    c.check(r.value("annihilator_trivial", false) &&
                smith_normal_form(g).rank() == j.ambient(),
            "J^perp is not trivial");
  }
  std::optional<Rational> optimal;
  if (r.contains("optimal")) optimal = io::rational_from_json(r.at("optimal"));
  if (optimal && r.contains("optimal_pair")) {
    auto p = read_pair(r.at("optimal_pair"), j);
    c.check(pair_in_dual(p, j), "optimal pair is not in X_J");
    c.check(!(p.first == p.second), "optimal pair is not distinct");
    c.check(separation(*j.semigroup(), p.first, p.second) == *optimal,
            "optimal pair does not attain the reported constant");
  }
  if (r.contains("bound")) {
    auto bound = io::rational_from_json(r.at("bound"));
    c.check(cover && theoretical_constant(j, *cover) == bound, "bound does not match the cover");
    if (optimal) c.check(*optimal >= bound, "optimal constant lies below the bound");
  }
}

void verify_theoremb(Checker& c, const json& input, const json& r) {
  if (!r.value("present", false)) return;
  auto j    = io::presentation_from_json(input);
  auto s    = j.semigroup();
  auto b    = io::matrix_from_json<Integer>(r.at("B"), s);
  auto cm   = io::matrix_from_json<Rational>(r.at("C"), s);
  auto x    = io::matrix_from_json<Rational>(r.at("X"), s);
  auto idm  = io::matrix_from_json<Rational>(r.at("I"), s);
  auto m    = io::integer_from_json(r.at("m"));
  auto a_q  = j.a.cast<Rational>();
  bool diag = idm.rows() == j.n() && idm.cols() == j.n();
  for (std::size_t p = 0; diag && p < j.n(); ++p) {
    for (std::size_t q = 0; q < j.n(); ++q) {
      diag = diag && (p == q ? idm(p, q) == idm(0, 0) : idm(p, q).is_zero());
    }
  }
  c.check(diag, "I is not diagonal");
  if (diag && j.n() > 0) check_left_identity(c, idm(0, 0), false, "the diagonal of I");
  c.check(matrix_multiply(a_q, x) == idm, "A * X differs from I");
  c.check(matrix_multiply(a_q, Rational(m) * x) == b.cast<Rational>(), "B differs from A * (m X)");
  c.check(matrix_multiply(b.cast<Rational>(), cm) == idm, "B * C differs from I");
  bool inside = true;
  for (std::size_t col = 0; col < j.n(); ++col) {
    for (Element t = 0; t < j.m(); ++t) {
      inside = inside && module_membership(flatten(matrix_apply(b, basis_vector(s, j.n(), col, t))), j);
    }
  }
  c.check(inside, "a column of B lies outside J");
}

void verify_rees(Checker& c, const json& input, const json& r) {
  auto spec = io::rees_from_json(input);
  auto s    = rees_build(spec);
  check_table(c, r.at("semigroup"), s);
  auto rep = rees_report(spec);
  c.check(r.at("expansive").get<bool>() == rep.expansive, "expansive flag disagrees with P");
  c.check(r.at("idempotent_cover").get<bool>() == rep.idempotent_cover, "cover flag disagrees with P");
  if (r.contains("determinant")) {
    auto det = io::integer_from_json(r.at("determinant"));
    c.check(det == determinant(rees_block_matrix(spec)), "determinant is wrong");
    c.check(r.at("unital_l1").get<bool>() == (sgn(det) != 0), "unital flag disagrees with the determinant");
  } else {
    c.check(!r.at("unital_l1").get<bool>(), "non-square P reported unital");
  }
  if (auto e = read_elem(r.at("two_sided_identity"), s)) check_left_identity(c, *e, true, "two-sided identity");
}

void verify_union(Checker& c, const json& input, const json& r) {
  auto u = union_build(io::union_from_json(input));
  check_table(c, r.at("semigroup"), u.semigroup);
  if (auto e = read_elem(r.at("left_identity"), u.semigroup)) {
    check_left_identity(c, *e, false, "union left identity");
  }
}

void verify_analyze(Checker& c, const json& input, const json& r) {
  auto s = io::semigroup_from_json(input);
  check_table(c, r.at("semigroup"), s);
  if (!r.at("cover").is_null()) {
    c.check(is_left_cover(*s, r.at("cover").at("elements").get<ElementSet>()), "cover K fails KS = S");
  }
  if (!r.at("idempotent_cover").is_null()) {
    auto f   = r.at("idempotent_cover").get<ElementSet>();
    bool idm = true;
    for (auto e : f) idm = idm && is_idempotent(*s, e);
    c.check(idm && is_left_cover(*s, f), "idempotent cover is not a cover by idempotents");
  }
  if (auto e = read_elem(r.at("left_identity"), s)) check_left_identity(c, *e, false, "left identity");
  if (auto e = read_elem(r.at("two_sided_identity"), s)) check_left_identity(c, *e, true, "two-sided identity");
  if (r.contains("inverse_identity")) {
    check_left_identity(c, *read_elem(r.at("inverse_identity"), s), true, "inverse-semigroup identity");
  }
  if (r.contains("counterexample")) {
    Element missed = r.at("counterexample").at("missed").get<Element>();
    auto    sq     = product_set(*s, all_elements(*s), all_elements(*s));
    c.check(!std::binary_search(sq.begin(), sq.end(), missed), "counterexample element lies in SS");
    ModulePresentation j{io::matrix_from_json<Integer>(r.at("counterexample").at("A"), s), Span::Generated};
    auto x = io::point_from_json(r.at("counterexample").at("x"), 1, s->size());
    auto y = io::point_from_json(r.at("counterexample").at("y"), 1, s->size());
    c.check(membership_check(x, j) && membership_check(y, j), "counterexample points are not in X_J");
    c.check(!(x == y) && sgn(separation(*s, x, y)) == 0, "counterexample pair separates");
  }
}

void verify_family(Checker& c, const json& input, const json& r) {
  check_table(c, r.at("semigroup"), io::semigroup_from_json(input));
}

void verify_laurent(Checker& c, const json& input, const json& r) {
  auto a = io::laurent_from_json(input);
  // each reported root must be a root of z^{-lo} a(z), up to rounding
  double scale = 0;
  for (auto v : a.coeffs) scale += std::abs(static_cast<double>(v));
  for (const auto& root : r.at("roots")) {
    Complex z(root.at("re").get<double>(), root.at("im").get<double>());
    Complex acc = 0;
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = acc * z + static_cast<double>(*it);
    double size = std::pow(std::max(1.0, std::abs(z)), static_cast<double>(a.coeffs.size() - 1));
    c.check(std::abs(acc) <= 1e-8 * scale * size, "reported root does not annihilate a");
  }
  if (!r.contains("inverse") || r.at("inverse").contains("error")) return;
  const auto& inv = r.at("inverse");
  std::vector<Rational> b;
  for (const auto& v : inv.at("coeffs")) b.push_back(io::rational_from_json(v));
  auto residual = laurent_residual(a, inv.at("lo").get<std::int64_t>(), b);
  c.check(residual == io::rational_from_json(inv.at("residual")), "residual does not match the coefficients");
  c.check(residual.get_d() <= inv.at("tol").get<double>(), "residual exceeds tol");
}

CommandResult dispatch(const std::string& command, const json& input, const CommandOptions& options) {
  if (command == "analyze") return run_analyze(input);
  if (command == "action") return run_action(input, options);
  if (command == "theoremb") return run_theoremb(input);
  if (command == "rees") return run_rees(input, options);
  if (command == "union") return run_union(input);
  if (command == "laurent") return run_laurent(input);
  if (command == "family") return run_family(input);
  throw Error(ErrorCode::ParseError, "unknown command '" + command + "'");
}

}  // namespace

CommandResult run_command(const std::string& command, const json& input, const CommandOptions& options) {
  try {
    return dispatch(command, input, options);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed input: ") + e.what());
  }
}

VerifyOutcome verify_report(const json& report) {
  Checker c;
  if (!report.is_object() || !report.contains("command") || !report.contains("input") ||
      !report.contains("result")) {
    throw Error(ErrorCode::ParseError, "a report needs command, input and result");
  }
  const auto  command = report.at("command").get<std::string>();
  const auto& input   = report.at("input");
  const auto& result  = report.at("result");
  static const std::map<std::string, std::function<void(Checker&, const json&, const json&)>> table{
      {"analyze", verify_analyze}, {"action", verify_action}, {"theoremb", verify_theoremb},
      {"rees", verify_rees},       {"union", verify_union},   {"laurent", verify_laurent},
      {"family", verify_family}};
  auto it = table.find(command);
  if (it == table.end()) throw Error(ErrorCode::ParseError, "unknown command '" + command + "'");
  try {
    it->second(c, input, result);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
  return c.out;
}

}  // namespace semiexp
