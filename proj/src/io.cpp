#include "semiexp/io.hpp"

#include <limits>

#include "semiexp/error.hpp"

namespace semiexp::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    parse_fail(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Ring ring_from_name(const std::string& name) {
  if (name == "Int") return Ring::Int;
  if (name == "Rat") return Ring::Rat;
  if (name == "GaussRat") return Ring::GaussRat;
  if (name == "Float64Complex") return Ring::Float64Complex;
  parse_fail("unknown ring '" + name + "'");
}

Element index_from_key(const std::string& key, std::size_t m) {
  std::size_t pos = 0;
  long long   v   = -1;
  try {
    v = std::stoll(key, &pos);
  } catch (const std::exception&) {
    parse_fail("element index '" + key + "' is not an integer");
  }
  if (pos != key.size() || v < 0 || static_cast<std::size_t>(v) >= m) {
    parse_fail("element index '" + key + "' out of range");
  }
  return static_cast<Element>(v);
}

}  // namespace

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) parse_fail("bad integer string");
    return v;
  }
  parse_fail("expected an integer");
}

json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from_json(j));
  if (!j.is_array() || j.empty() || j.size() > 2) parse_fail("expected [num, den]");
  Integer num = integer_from_json(j[0]);
  Integer den = j.size() == 2 ? integer_from_json(j[1]) : Integer(1);
  if (sgn(den) == 0) parse_fail("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json semigroup_to_json(const FiniteSemigroup& s) {
  return {{"size", s.size()}, {"table", s.rows()}};
}

SemigroupRef semigroup_from_json(const json& j) {
  if (j.is_object() && j.contains("family")) {
    std::vector<std::size_t> params;
    if (j.contains("params")) {
      for (const auto& p : j.at("params")) params.push_back(size_from_json(p, "family parameter"));
    }
    std::vector<SemigroupRef> operands;
    if (j.contains("operands")) {
      for (const auto& o : j.at("operands")) operands.push_back(semigroup_from_json(o));
    }
    if (!j.at("family").is_string()) parse_fail("family must be a string");
    return family(j.at("family").get<std::string>(), params, operands);
  }
  std::size_t m     = size_from_json(field(j, "size"), "size");
  const auto& table = field(j, "table");
  if (!table.is_array()) parse_fail("table must be an array of rows");
  RawTable raw;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& row = table[r];
    if (!row.is_array()) parse_fail("table row " + std::to_string(r) + " is not an array");
    std::vector<std::int64_t> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer()) {
        parse_fail("table entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not an integer");
      }
      values.push_back(row[c].get<std::int64_t>());
    }
    raw.push_back(std::move(values));
  }
  return validate_table(m, raw);
}

json element_to_json(const AnyElem& e) {
  json coeffs = json::object();
  std::visit(
      [&](const auto& el) {
        using C = typename std::decay_t<decltype(el)>::coeff_type;
        for (const auto& [t, c] : el.terms()) {
          auto key = std::to_string(t);
          if constexpr (std::is_same_v<C, Integer>) {
            coeffs[key] = json::array({integer_to_json(c), 1});
          } else if constexpr (std::is_same_v<C, Rational>) {
            coeffs[key] = rational_to_json(c);
          } else if constexpr (std::is_same_v<C, GaussRational>) {
            coeffs[key] = json::array({integer_to_json(c.re.get_num()), integer_to_json(c.re.get_den()),
                                       integer_to_json(c.im.get_num()), integer_to_json(c.im.get_den())});
          } else {
            coeffs[key] = json::array({c.real(), c.imag()});
          }
        }
      },
      e);
  return {{"ring", to_string(ring_of_any(e))}, {"coeffs", std::move(coeffs)}};
}

AnyElem element_from_json(const json& j, const SemigroupRef& s) {
  Ring        ring   = ring_from_name(j.contains("ring") ? j.at("ring").get<std::string>() : "Int");
  const auto& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) parse_fail("coeffs must be an object keyed by element index");
  std::size_t m = s->size();
  switch (ring) {
    case Ring::Int: {
      AlgElem<Integer> out(s);
      for (const auto& [k, v] : coeffs.items()) {
        Rational q = rational_from_json(v);
        if (q.get_den() != 1) parse_fail("Int coefficient at " + k + " is not integral");
        out.set(index_from_key(k, m), q.get_num());
      }
      return out;
    }
    case Ring::Rat: {
      AlgElem<Rational> out(s);
      for (const auto& [k, v] : coeffs.items()) out.set(index_from_key(k, m), rational_from_json(v));
      return out;
    }
    case Ring::GaussRat: {
      AlgElem<GaussRational> out(s);
      for (const auto& [k, v] : coeffs.items()) {
        if (v.is_array() && v.size() == 4) {
          out.set(index_from_key(k, m),
                  GaussRational(rational_from_json(json::array({v[0], v[1]})),
                                rational_from_json(json::array({v[2], v[3]}))));
        } else {
          out.set(index_from_key(k, m), GaussRational(rational_from_json(v)));
        }
      }
      return out;
    }
    case Ring::Float64Complex: {
      AlgElem<Complex> out(s);
      for (const auto& [k, v] : coeffs.items()) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
          parse_fail("Float64Complex coefficient must be [re, im]");
        }
        out.set(index_from_key(k, m), Complex(v[0].get<double>(), v[1].get<double>()));
      }
      return out;
    }
  }
  parse_fail("unreachable ring");
}

template <class C>
AlgElem<C> typed_element_from_json(const json& j, const SemigroupRef& s) {
  json doc = j;
  if (!doc.contains("ring")) doc["ring"] = to_string(ring_of<C>::value);
  AnyElem any = element_from_json(doc, s);
  return std::visit(
      [&](const auto& el) -> AlgElem<C> {
        using D = typename std::decay_t<decltype(el)>::coeff_type;
        if constexpr (std::is_same_v<D, C>) {
          return el;
        } else if constexpr (std::is_same_v<C, Rational> && std::is_same_v<D, Integer>) {
          return el.template cast<Rational>();
        } else if constexpr (std::is_same_v<C, GaussRational> &&
                             (std::is_same_v<D, Integer> || std::is_same_v<D, Rational>)) {
          return el.template cast<GaussRational>();
        } else {
          parse_fail(std::string("expected ring ") + to_string(ring_of<C>::value) + ", got " +
                     to_string(ring_of<D>::value));
        }
      },
      any);
}

template AlgElem<Integer>       typed_element_from_json<Integer>(const json&, const SemigroupRef&);
template AlgElem<Rational>      typed_element_from_json<Rational>(const json&, const SemigroupRef&);
template AlgElem<GaussRational> typed_element_from_json<GaussRational>(const json&, const SemigroupRef&);

template <class C>
AlgMat<C> matrix_from_json(const json& j, const SemigroupRef& s) {
  std::size_t rows    = size_from_json(field(j, "rows"), "rows");
  std::size_t cols    = size_from_json(field(j, "cols"), "cols");
  const auto& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) parse_fail("entries must have `rows` rows");
  AlgMat<C> out(s, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) {
      parse_fail("matrix row " + std::to_string(r) + " must have `cols` entries");
    }
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = typed_element_from_json<C>(entries[r][c], s);
  }
  return out;
}

template AlgMat<Integer>  matrix_from_json<Integer>(const json&, const SemigroupRef&);
template AlgMat<Rational> matrix_from_json<Rational>(const json&, const SemigroupRef&);

json presentation_to_json(const ModulePresentation& p) {
  return {{"semigroup", semigroup_to_json(*p.semigroup())},
          {"A", matrix_to_json(p.a)},
          {"module", p.span == Span::Image ? "image" : "generated"}};
}

ModulePresentation presentation_from_json(const json& j) {
  auto s    = semigroup_from_json(field(j, "semigroup"));
  Span span = Span::Image;
  if (j.contains("module")) {
    const auto& mode = j.at("module");
    if (mode == "generated") {
      span = Span::Generated;
    } else if (mode != "image") {
      parse_fail("module must be \"image\" or \"generated\"");
    }
  }
  return ModulePresentation{matrix_from_json<Integer>(field(j, "A"), s), span};
}

json point_to_json(const TorusPoint& x) {
  json coords = json::array();
  for (const auto& c : x.coords()) coords.push_back(rational_to_json(c));
  return {{"coords", std::move(coords)}};
}

TorusPoint point_from_json(const json& j, std::size_t n, std::size_t m) {
  const auto& coords = field(j, "coords");
  if (!coords.is_array()) parse_fail("coords must be an array");
  std::vector<Rational> c;
  for (const auto& v : coords) c.push_back(rational_from_json(v));
  return TorusPoint(n, m, std::move(c));
}

json integer_vector_to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> integer_vector_from_json(const json& j) {
  if (!j.is_array()) parse_fail("expected an integer array");
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

json report_to_json(const ExpansivityReport& r) {
  json out = {{"decision", to_string(r.decision)},
              {"route", to_string(r.route)},
              {"annihilator_trivial", r.annihilator_trivial},
              {"free_rank", r.free_rank},
              {"invariant_factors", integer_vector_to_json(r.invariant_factors)},
              {"note", r.note}};
  if (r.cover) out["cover"] = {{"elements", r.cover->elements}, {"minimal", r.cover->minimal}};
  if (r.dual_order) out["dual_order"] = integer_to_json(*r.dual_order);
  if (r.optimal_constant) out["optimal"] = rational_to_json(*r.optimal_constant);
  if (r.optimal_pair) {
    out["optimal_pair"] = json::array({point_to_json(r.optimal_pair->first), point_to_json(r.optimal_pair->second)});
  }
  if (r.theoretical_bound) out["bound"] = rational_to_json(*r.theoretical_bound);
  if (r.bound_prefix) out["bound_prefix"] = *r.bound_prefix;
  if (r.annihilator_witness) out["annihilator_witness"] = integer_vector_to_json(*r.annihilator_witness);
  if (r.pair_witness) {
    out["witness_pair"] = json::array({point_to_json(r.pair_witness->first), point_to_json(r.pair_witness->second)});
  }
  return out;
}

json witness_to_json(const TheoremBWitness& w) {
  return {{"B", matrix_to_json(w.b)},
          {"C", matrix_to_json(w.c)},
          {"X", matrix_to_json(w.x)},
          {"m", integer_to_json(w.m)},
          {"I", matrix_to_json(w.identity)}};
}

json flags_to_json(const StructureFlags& f) {
  json out = {{"is_monoid", f.is_monoid},
              {"has_left_identity_element", f.has_left_identity_element},
              {"is_cancellative", f.is_cancellative},
              {"is_regular", f.is_regular},
              {"is_inverse", f.is_inverse},
              {"idempotents", f.idempotents}};
  out["identity"] = f.identity ? json(*f.identity) : json(nullptr);
  return out;
}

json rees_to_json(const ReesSpec& spec) {
  json p = json::array();
  for (const auto& row : spec.p) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e ? json(*e) : json(nullptr));
    p.push_back(std::move(r));
  }
  return {{"group", semigroup_to_json(*spec.group)},
          {"I", spec.i_size},
          {"Lambda", spec.lambda_size},
          {"P", std::move(p)}};
}

ReesSpec rees_from_json(const json& j) {
  ReesSpec spec;
  spec.group       = semigroup_from_json(field(j, "group"));
  spec.i_size      = size_from_json(field(j, "I"), "I");
  spec.lambda_size = size_from_json(field(j, "Lambda"), "Lambda");
  const auto& p    = field(j, "P");
  if (!p.is_array()) parse_fail("P must be an array of rows");
  for (const auto& row : p) {
    if (!row.is_array()) parse_fail("P rows must be arrays");
    std::vector<std::optional<Element>> r;
    for (const auto& e : row) {
      if (e.is_null()) {
        r.emplace_back();
      } else {
        r.emplace_back(size_from_json(e, "P entry"));
      }
    }
    spec.p.push_back(std::move(r));
  }
  validate_rees(spec);
  return spec;
}

json union_to_json(const std::vector<SemigroupRef>& components) {
  json c = json::array();
  for (const auto& s : components) c.push_back(semigroup_to_json(*s));
  return {{"components", std::move(c)}};
}

std::vector<SemigroupRef> union_from_json(const json& j) {
  const auto& c = field(j, "components");
  if (!c.is_array()) parse_fail("components must be an array");
  std::vector<SemigroupRef> out;
  for (const auto& s : c) out.push_back(semigroup_from_json(s));
  return out;
}

json laurent_to_json(const LaurentElem& a) { return {{"lo", a.lo}, {"coeffs", a.coeffs}}; }

LaurentElem laurent_from_json(const json& j) {
  const auto& lo = field(j, "lo");
  const auto& c  = field(j, "coeffs");
  if (!lo.is_number_integer()) parse_fail("lo must be an integer");
  if (!c.is_array()) parse_fail("coeffs must be an array");
  std::vector<std::int64_t> coeffs;
  for (const auto& v : c) {
    if (!v.is_number_integer()) parse_fail("Laurent coefficients must be integers");
    coeffs.push_back(v.get<std::int64_t>());
  }
  return LaurentElem::make(lo.get<std::int64_t>(), std::move(coeffs));
}

}  // namespace semiexp::io
