#pragma once

// Rees matrix semigroups, disjoint unions with a zero, inverse-semigroup
// identities and the named families.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semiexp/algebra.hpp"
#include "semiexp/integer_matrix.hpp"
#include "semiexp/semigroup.hpp"

namespace semiexp {

// M^0(G; I, Lambda; P). p[lambda][i] is a group element index, or nullopt for
// the zero of G^0.
struct ReesSpec {
  SemigroupRef                                     group;
  std::size_t                                      i_size      = 1;
  std::size_t                                      lambda_size = 1;
  std::vector<std::vector<std::optional<Element>>> p;
};

// Throws InvalidGroup when `group` is not a group or P is malformed.
void validate_rees(const ReesSpec& spec);

// z is element 0; (i, g, lambda) is 1 + (i |G| + g) |Lambda| + lambda.
Element rees_index(const ReesSpec& spec, std::size_t i, Element g, std::size_t lambda);

SemigroupRef rees_build(const ReesSpec& spec);

struct ReesReport {
  bool expansive        = false;  // some entry of P lies in G
  bool idempotent_cover = false;  // every column of P has an entry in G
  bool unital_l1        = false;  // |I| = |Lambda| and P invertible over Q[G]
};

ReesReport rees_report(const ReesSpec& spec);

// The |Lambda||G| x |I||G| block matrix with block (lambda, i) the left
// regular representation of p[lambda][i] (zero block for the zero).
IntMatrix rees_block_matrix(const ReesSpec& spec);

// I x Lambda matrix over Q[G] of an element of Q[S]; the z coefficient is
// dropped (the quotient by Q delta_z).
using GroupRingMatrix = std::vector<std::vector<AlgElem<Rational>>>;

GroupRingMatrix rees_matrix_form(const ReesSpec& spec, const AlgElem<Rational>& a);

// A P B over Q[G].
GroupRingMatrix rees_sandwich_product(const ReesSpec& spec, const GroupRingMatrix& a,
                                      const GroupRingMatrix& b);

struct UnionResult {
  SemigroupRef                     semigroup;
  std::vector<Element>             offsets;        // component c, element s -> offsets[c] + s
  std::optional<AlgElem<Rational>> left_identity;  // (1 - n) delta_z + sum_c e_c
};

// z is element 0, then the components in order. Throws PreconditionViolated
// for fewer than two components.
UnionResult union_build(const std::vector<SemigroupRef>& components);

// Identity of Q[E_S] extended by zero. Throws NotInverse, or
// IdentitySolveFailed if the result is not a two-sided identity of Q[S].
AlgElem<Rational> inverse_semigroup_identity(const SemigroupRef& s);

// cyclic_group(m), left_zero(m), right_zero(m), null_with_zero(m) (z = 0),
// trunc_min(m) (element i is the value i + 1 under min), direct_product(S, T)
// (pair (s, t) at s |T| + t). Throws UnknownFamily, or PreconditionViolated
// for bad parameters.
SemigroupRef family(const std::string& name, const std::vector<std::size_t>& params,
                    const std::vector<SemigroupRef>& operands = {});

SemigroupRef direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t);

// True when s is a group: a monoid in which every element has an inverse.
bool is_group(const FiniteSemigroup& s);

}  // namespace semiexp
