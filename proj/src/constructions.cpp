#include "semiexp/constructions.hpp"

#include <algorithm>

#include "semiexp/error.hpp"

namespace semiexp {

bool is_group(const FiniteSemigroup& s) {
  auto flags = classify(s);
  if (!flags.identity) return false;
  Element one = *flags.identity;
  for (Element g = 0; g < s.size(); ++g) {
    bool inv = false;
    for (Element h = 0; h < s.size() && !inv; ++h) inv = s.product(g, h) == one && s.product(h, g) == one;
    if (!inv) return false;
  }
  return true;
}

void validate_rees(const ReesSpec& spec) {
  if (!spec.group || !is_group(*spec.group)) {
    throw Error(ErrorCode::InvalidGroup, "the Rees group is not a group");
  }
  if (spec.i_size == 0 || spec.lambda_size == 0) {
    throw Error(ErrorCode::InvalidGroup, "index sets must be nonempty");
  }
  if (spec.p.size() != spec.lambda_size) {
    throw Error(ErrorCode::InvalidGroup, "P must have |Lambda| rows");
  }
  for (std::size_t l = 0; l < spec.p.size(); ++l) {
    if (spec.p[l].size() != spec.i_size) {
      throw Error(ErrorCode::InvalidGroup, "row " + std::to_string(l) + " of P must have |I| entries");
    }
    for (const auto& e : spec.p[l]) {
      if (e && *e >= spec.group->size()) {
        throw Error(ErrorCode::InvalidGroup, "P entry " + std::to_string(*e) + " is not in G");
      }
    }
  }
}

Element rees_index(const ReesSpec& spec, std::size_t i, Element g, std::size_t lambda) {
  return 1 + (i * spec.group->size() + g) * spec.lambda_size + lambda;
}

SemigroupRef rees_build(const ReesSpec& spec) {
  validate_rees(spec);
  const auto& g  = *spec.group;
  std::size_t gs = g.size(), ni = spec.i_size, nl = spec.lambda_size;
  std::size_t m  = ni * gs * nl + 1;
  RawTable    table(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < ni; ++i) {
    for (Element a = 0; a < gs; ++a) {
      for (std::size_t l = 0; l < nl; ++l) {
        Element x = rees_index(spec, i, a, l);
        for (std::size_t j = 0; j < ni; ++j) {
          const auto& p = spec.p[l][j];
          if (!p) continue;
          for (Element b = 0; b < gs; ++b) {
            for (std::size_t mu = 0; mu < nl; ++mu) {
              Element y   = rees_index(spec, j, b, mu);
              table[x][y] = static_cast<std::int64_t>(
                  rees_index(spec, i, g.product(g.product(a, *p), b), mu));
            }
          }
        }
      }
    }
  }
  return validate_table(m, table);
}

IntMatrix rees_block_matrix(const ReesSpec& spec) {
  validate_rees(spec);
  const auto& g  = *spec.group;
  std::size_t gs = g.size();
  IntMatrix   out(spec.lambda_size * gs, spec.i_size * gs);
  for (std::size_t l = 0; l < spec.lambda_size; ++l) {
    for (std::size_t i = 0; i < spec.i_size; ++i) {
      const auto& p = spec.p[l][i];
      if (!p) continue;
      for (Element h = 0; h < gs; ++h) out(l * gs + g.product(*p, h), i * gs + h) = 1;
    }
  }
  return out;
}

ReesReport rees_report(const ReesSpec& spec) {
  validate_rees(spec);
  ReesReport rep;
  rep.idempotent_cover = true;
  for (std::size_t i = 0; i < spec.i_size; ++i) {
    bool column = false;
    for (std::size_t l = 0; l < spec.lambda_size; ++l) column = column || spec.p[l][i].has_value();
    rep.expansive        = rep.expansive || column;
    rep.idempotent_cover = rep.idempotent_cover && column;
  }
  rep.unital_l1 = spec.i_size == spec.lambda_size && sgn(determinant(rees_block_matrix(spec))) != 0;
  return rep;
}

GroupRingMatrix rees_matrix_form(const ReesSpec& spec, const AlgElem<Rational>& a) {
  validate_rees(spec);
  std::size_t     gs = spec.group->size();
  GroupRingMatrix out(spec.i_size,
                      std::vector<AlgElem<Rational>>(spec.lambda_size, AlgElem<Rational>(spec.group)));
  for (const auto& [x, c] : a.terms()) {
    if (x == 0) continue;
    std::size_t r = x - 1;
    std::size_t l = r % spec.lambda_size;
    r /= spec.lambda_size;
    out[r / gs][l].add(r % gs, c);
  }
  return out;
}

GroupRingMatrix rees_sandwich_product(const ReesSpec& spec, const GroupRingMatrix& a,
                                      const GroupRingMatrix& b) {
  validate_rees(spec);
  std::size_t rows = a.size(), cols = b.empty() ? 0 : b.front().size();
  GroupRingMatrix out(rows, std::vector<AlgElem<Rational>>(cols, AlgElem<Rational>(spec.group)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t l = 0; l < spec.lambda_size; ++l) {
      for (std::size_t j = 0; j < spec.i_size; ++j) {
        const auto& p = spec.p[l][j];
        if (!p || a[i][l].is_zero()) continue;
        auto ap = convolve(a[i][l], AlgElem<Rational>::delta(spec.group, *p));
        for (std::size_t mu = 0; mu < cols; ++mu) out[i][mu] += convolve(ap, b[j][mu]);
      }
    }
  }
  return out;
}

UnionResult union_build(const std::vector<SemigroupRef>& components) {
  if (components.size() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "a union needs at least two components");
  }
  UnionResult out;
  std::size_t m = 1;
  for (const auto& c : components) {
    out.offsets.push_back(m);
    m += c->size();
  }
  RawTable table(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& s   = *components[c];
    Element     off = out.offsets[c];
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        table[off + a][off + b] = static_cast<std::int64_t>(off + s.product(a, b));
      }
    }
  }
  out.semigroup = validate_table(m, table);

  AlgElem<Rational> e(out.semigroup);
  e.set(0, Rational(1) - Rational(static_cast<long>(components.size())));
  for (std::size_t c = 0; c < components.size(); ++c) {
    auto ec = solve_left_identity<Rational>(components[c]);
    if (!ec) return out;
    for (const auto& [t, q] : ec->terms()) e.add(out.offsets[c] + t, q);
  }
  for (Element s = 0; s < m; ++s) {
    auto d = AlgElem<Rational>::delta(out.semigroup, s);
    if (!(convolve(e, d) == d)) {
      throw Error(ErrorCode::IdentitySolveFailed, "assembled union identity fails at element " +
                                                      std::to_string(s));
    }
  }
  out.left_identity = std::move(e);
  return out;
}

AlgElem<Rational> inverse_semigroup_identity(const SemigroupRef& sp) {
  const auto& s     = *sp;
  auto        flags = classify(s);
  if (!flags.is_inverse) throw Error(ErrorCode::NotInverse, "S is not an inverse semigroup");

  const auto& es = flags.idempotents;
  RawTable    sub(es.size(), std::vector<std::int64_t>(es.size()));
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = 0; b < es.size(); ++b) {
      auto it   = std::lower_bound(es.begin(), es.end(), s.product(es[a], es[b]));
      sub[a][b] = it - es.begin();
    }
  }
  auto e_sub = solve_left_identity<Rational>(validate_table(es.size(), sub), true);
  if (!e_sub) throw Error(ErrorCode::IdentitySolveFailed, "Q[E_S] has no identity");

  AlgElem<Rational> e(sp);
  for (const auto& [t, q] : e_sub->terms()) e.set(es[t], q);
  for (Element x = 0; x < s.size(); ++x) {
    auto d = AlgElem<Rational>::delta(sp, x);
    if (!(convolve(e, d) == d) || !(convolve(d, e) == d)) {
      throw Error(ErrorCode::IdentitySolveFailed,
                  "extended identity fails at element " + std::to_string(x));
    }
  }
  return e;
}

SemigroupRef direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  std::size_t m = s.size() * t.size();
  RawTable    table(m, std::vector<std::int64_t>(m));
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < t.size(); ++b) {
      for (Element c = 0; c < s.size(); ++c) {
        for (Element d = 0; d < t.size(); ++d) {
          table[a * t.size() + b][c * t.size() + d] =
              static_cast<std::int64_t>(s.product(a, c) * t.size() + t.product(b, d));
        }
      }
    }
  }
  return validate_table(m, table);
}

SemigroupRef family(const std::string& name, const std::vector<std::size_t>& params,
                    const std::vector<SemigroupRef>& operands) {
  if (name == "direct_product") {
    if (operands.size() != 2) {
      throw Error(ErrorCode::PreconditionViolated, "direct_product takes two semigroups");
    }
    return direct_product(*operands[0], *operands[1]);
  }
  bool known = name == "cyclic_group" || name == "left_zero" || name == "right_zero" ||
               name == "null_with_zero" || name == "trunc_min";
  if (!known) throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
  if (params.size() != 1 || params[0] == 0) {
    throw Error(ErrorCode::PreconditionViolated, name + " takes one positive size");
  }
  std::size_t m = params[0];
  RawTable    table(m, std::vector<std::int64_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t v = 0;
      if (name == "cyclic_group") v = (a + b) % m;
      else if (name == "left_zero") v = a;
      else if (name == "right_zero") v = b;
      else if (name == "null_with_zero") v = 0;
      else v = std::min(a, b);
      table[a][b] = static_cast<std::int64_t>(v);
    }
  }
  return validate_table(m, table);
}

}  // namespace semiexp
