#pragma once

// Finite semigroups given by multiplication tables.
//
// Elements are the indices 0..m-1 in table order. That order is frozen at
// construction and doubles as the enumeration s_1, s_2, ... used by the
// metric on (T^S)^n, so element i is s_{i+1}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace semiexp {

using Element    = std::size_t;
using ElementSet = std::vector<Element>;  // sorted, no duplicates
using RawTable   = std::vector<std::vector<std::int64_t>>;

class FiniteSemigroup {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return m_; }

  [[nodiscard]] Element product(Element a, Element b) const noexcept {
    return table_[a * m_ + b];
  }

  [[nodiscard]] std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.m_ == b.m_ && a.table_ == b.table_;
  }

 private:
  friend std::shared_ptr<const FiniteSemigroup> validate_table(std::size_t m,
                                                               const RawTable& table);
  FiniteSemigroup(std::size_t m, std::vector<Element> table)
      : m_(m), table_(std::move(table)) {}

  std::size_t          m_;
  std::vector<Element> table_;
};

using SemigroupRef = std::shared_ptr<const FiniteSemigroup>;

// Same semigroup object, or equal tables.
bool same_semigroup(const SemigroupRef& a, const SemigroupRef& b);

// Throws Error{OutOfRange} for a bad entry or a non-square grid and
// Error{NotAssociative} naming the first failing triple (a,b,c) in
// lexicographic order.
SemigroupRef validate_table(std::size_t m, const RawTable& table);

// First (a,b,c) with (ab)c != a(bc), if any. Entries must be in range.
std::optional<std::array<Element, 3>> first_nonassociative_triple(std::size_t m,
                                                                  const RawTable& table);

struct StructureFlags {
  bool       is_monoid                 = false;
  bool       has_left_identity_element = false;
  bool       is_cancellative           = false;
  bool       is_regular                = false;
  bool       is_inverse                = false;
  ElementSet idempotents;
  std::optional<Element> identity;  // two-sided identity element, if any
};

StructureFlags classify(const FiniteSemigroup& s);

bool is_idempotent(const FiniteSemigroup& s, Element e);

// { ab : a in lhs, b in rhs }, sorted.
ElementSet product_set(const FiniteSemigroup& s, const ElementSet& lhs, const ElementSet& rhs);

ElementSet all_elements(const FiniteSemigroup& s);

// KS == S.
bool is_left_cover(const FiniteSemigroup& s, const ElementSet& k);

// SS == S; for finite S this is exactly the existence of a cover.
bool is_expansive_semigroup(const FiniteSemigroup& s);

struct LeftCover {
  ElementSet elements;
  bool       minimal = true;  // false when the exhaustive phase ran out of budget
};

// Minimum-cardinality K with KS = S. Greedy set cover first, then an
// exhaustive sweep of smaller subsets bounded by `budget` candidates.
std::optional<LeftCover> minimal_left_cover(const FiniteSemigroup& s, std::size_t budget = 100000);

// Shrinks a cover K to a cover F by idempotents, or returns nullopt when some
// t in K has no left stabilizer r (rt = t). Throws PreconditionViolated if
// KS != S.
std::optional<ElementSet> reduce_to_idempotents(const FiniteSemigroup& s, const ElementSet& k);

}  // namespace semiexp
