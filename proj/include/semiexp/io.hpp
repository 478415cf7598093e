#pragma once

// JSON documents for every object that crosses the library boundary.
// Rationals are [num, den]; numbers that do not fit in 64 bits are written
// as decimal strings. Parsing failures throw Error{ParseError}.

#include <nlohmann/json.hpp>

#include "semiexp/algebra.hpp"
#include "semiexp/constructions.hpp"
#include "semiexp/duality.hpp"
#include "semiexp/dynamics.hpp"
#include "semiexp/invertibility.hpp"

namespace semiexp::io {

using nlohmann::json;

json    integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json     rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json semigroup_to_json(const FiniteSemigroup& s);
// {"size", "table"}, or {"family": name, "params": [...], "operands": [...]}.
SemigroupRef semigroup_from_json(const json& j);

json    element_to_json(const AnyElem& e);
AnyElem element_from_json(const json& j, const SemigroupRef& s);

template <class C>
json element_to_json(const AlgElem<C>& e) {
  return element_to_json(AnyElem(e));
}

// Coefficients must be representable in C (an Int element cannot carry 1/2).
template <class C>
AlgElem<C> typed_element_from_json(const json& j, const SemigroupRef& s);

template <class C>
json matrix_to_json(const AlgMat<C>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class C>
AlgMat<C> matrix_from_json(const json& j, const SemigroupRef& s);

// {"semigroup": ..., "A": matrix over Int, "module": "image" | "generated"}
// ("module" defaults to image).
json               presentation_to_json(const ModulePresentation& p);
ModulePresentation presentation_from_json(const json& j);

json       point_to_json(const TorusPoint& x);
TorusPoint point_from_json(const json& j, std::size_t n, std::size_t m);

json integer_vector_to_json(const std::vector<Integer>& v);
std::vector<Integer> integer_vector_from_json(const json& j);

json report_to_json(const ExpansivityReport& r);
json witness_to_json(const TheoremBWitness& w);
json flags_to_json(const StructureFlags& f);

json     rees_to_json(const ReesSpec& spec);
ReesSpec rees_from_json(const json& j);

json                      union_to_json(const std::vector<SemigroupRef>& components);
std::vector<SemigroupRef> union_from_json(const json& j);

json        laurent_to_json(const LaurentElem& a);
LaurentElem laurent_from_json(const json& j);

}  // namespace semiexp::io
