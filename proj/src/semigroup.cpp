#include "semiexp/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "semiexp/error.hpp"

namespace semiexp {

namespace {

// Fixed-width bitset over element indices.
class ElementBits {
 public:
  explicit ElementBits(std::size_t m) : words_((m + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  ElementBits& operator|=(const ElementBits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  [[nodiscard]] std::size_t count_new(const ElementBits& covered) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += static_cast<std::size_t>(__builtin_popcountll(words_[w] & ~covered.words_[w]));
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<ElementBits> left_translate_images(const FiniteSemigroup& s) {
  std::size_t              m = s.size();
  std::vector<ElementBits> images(m, ElementBits(m));
  for (Element t = 0; t < m; ++t) {
    for (Element u = 0; u < m; ++u) images[t].set(s.product(t, u));
  }
  return images;
}

// Advances `idx` (strictly increasing, values < m) to the next combination.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
  std::vector<std::vector<Element>> out(m_, std::vector<Element>(m_));
  for (Element a = 0; a < m_; ++a) {
    for (Element b = 0; b < m_; ++b) out[a][b] = product(a, b);
  }
  return out;
}

bool same_semigroup(const SemigroupRef& a, const SemigroupRef& b) {
  return a == b || (a && b && *a == *b);
}

std::optional<std::array<Element, 3>> first_nonassociative_triple(std::size_t m,
                                                                  const RawTable& t) {
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      auto ab = static_cast<Element>(t[a][b]);
      for (Element c = 0; c < m; ++c) {
        auto bc = static_cast<Element>(t[b][c]);
        if (t[ab][c] != t[a][bc]) return std::array<Element, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

SemigroupRef validate_table(std::size_t m, const RawTable& table) {
  if (m == 0) throw Error(ErrorCode::OutOfRange, "semigroup must have at least one element");
  if (table.size() != m) {
    throw Error(ErrorCode::OutOfRange, "table has " + std::to_string(table.size()) +
                                           " rows, expected " + std::to_string(m));
  }
  std::vector<Element> flat;
  flat.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m) {
      throw Error(ErrorCode::OutOfRange, "row " + std::to_string(a) + " has " +
                                             std::to_string(table[a].size()) +
                                             " entries, expected " + std::to_string(m));
    }
    for (std::size_t b = 0; b < m; ++b) {
      auto v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= m) {
        std::ostringstream os;
        os << "entry table[" << a << "][" << b << "] = " << v << " not in [0, " << m << ")";
        throw Error(ErrorCode::OutOfRange, os.str());
      }
      flat.push_back(static_cast<Element>(v));
    }
  }
  if (auto triple = first_nonassociative_triple(m, table)) {
    auto [a, b, c] = *triple;
    std::ostringstream os;
    os << "(a,b,c) = (" << a << "," << b << "," << c << "): (ab)c = " << table[table[a][b]][c]
       << " but a(bc) = " << table[a][table[b][c]];
    throw Error(ErrorCode::NotAssociative, os.str());
  }
  return SemigroupRef(new FiniteSemigroup(m, std::move(flat)));
}

bool is_idempotent(const FiniteSemigroup& s, Element e) { return s.product(e, e) == e; }

ElementSet all_elements(const FiniteSemigroup& s) {
  ElementSet out(s.size());
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

ElementSet product_set(const FiniteSemigroup& s, const ElementSet& lhs, const ElementSet& rhs) {
  std::vector<bool> hit(s.size(), false);
  for (auto a : lhs) {
    for (auto b : rhs) hit[s.product(a, b)] = true;
  }
  ElementSet out;
  for (Element x = 0; x < s.size(); ++x) {
    if (hit[x]) out.push_back(x);
  }
  return out;
}

bool is_left_cover(const FiniteSemigroup& s, const ElementSet& k) {
  return product_set(s, k, all_elements(s)).size() == s.size();
}

bool is_expansive_semigroup(const FiniteSemigroup& s) {
  return is_left_cover(s, all_elements(s));
}

StructureFlags classify(const FiniteSemigroup& s) {
  std::size_t    m = s.size();
  StructureFlags f;

  for (Element e = 0; e < m; ++e) {
    if (is_idempotent(s, e)) f.idempotents.push_back(e);
  }

  for (Element e = 0; e < m && !f.is_monoid; ++e) {
    bool left = true, right = true;
    for (Element x = 0; x < m; ++x) {
      left  = left && s.product(e, x) == x;
      right = right && s.product(x, e) == x;
    }
    f.has_left_identity_element = f.has_left_identity_element || left;
    if (left && right) {
      f.is_monoid = true;
      f.identity  = e;
    }
  }

  f.is_cancellative = true;
  for (Element r = 0; r < m && f.is_cancellative; ++r) {
    std::vector<bool> seen_left(m, false), seen_right(m, false);
    for (Element x = 0; x < m; ++x) {
      Element xr = s.product(x, r), rx = s.product(r, x);
      if (seen_left[xr] || seen_right[rx]) {
        f.is_cancellative = false;
        break;
      }
      seen_left[xr]  = true;
      seen_right[rx] = true;
    }
  }

  f.is_regular = true;
  for (Element x = 0; x < m && f.is_regular; ++x) {
    bool found = false;
    for (Element y = 0; y < m && !found; ++y) {
      found = s.product(s.product(x, y), x) == x && s.product(s.product(y, x), y) == y;
    }
    f.is_regular = found;
  }

  if (f.is_regular) {
    f.is_inverse = true;
    for (auto e : f.idempotents) {
      for (auto g : f.idempotents) {
        if (s.product(e, g) != s.product(g, e)) f.is_inverse = false;
      }
    }
  }
  return f;
}

std::optional<LeftCover> minimal_left_cover(const FiniteSemigroup& s, std::size_t budget) {
  std::size_t m = s.size();
  if (!is_expansive_semigroup(s)) return std::nullopt;

  auto images = left_translate_images(s);

  // Greedy: largest number of newly covered elements, lowest index on ties.
  ElementBits covered(m);
  ElementSet  greedy;
  while (covered.count() < m) {
    Element     best      = 0;
    std::size_t best_gain = 0;
    for (Element t = 0; t < m; ++t) {
      std::size_t gain = images[t].count_new(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best      = t;
      }
    }
    covered |= images[best];
    greedy.push_back(best);
  }
  std::sort(greedy.begin(), greedy.end());

  std::size_t tried = 0;
  for (std::size_t size = 1; size < greedy.size(); ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      if (++tried > budget) return LeftCover{greedy, false};
      ElementBits acc(m);
      for (auto t : idx) acc |= images[t];
      if (acc.count() == m) return LeftCover{ElementSet(idx.begin(), idx.end()), true};
    } while (next_combination(idx, m));
  }
  return LeftCover{greedy, true};
}

std::optional<ElementSet> reduce_to_idempotents(const FiniteSemigroup& s, const ElementSet& k) {
  if (!is_left_cover(s, k)) {
    throw Error(ErrorCode::PreconditionViolated, "reduce_to_idempotents requires KS = S");
  }
  std::size_t m = s.size();

  // Phase 1: a left stabilizer r_t (r_t t = t) for each t in K. Then every
  // s = t s' satisfies r_t s = s.
  ElementSet stabilizers;
  for (auto t : k) {
    std::optional<Element> r;
    for (Element cand = 0; cand < m && !r; ++cand) {
      if (s.product(cand, t) == t) r = cand;
    }
    if (!r) return std::nullopt;
    stabilizers.push_back(*r);
  }
  std::sort(stabilizers.begin(), stabilizers.end());
  stabilizers.erase(std::unique(stabilizers.begin(), stabilizers.end()), stabilizers.end());

  // Phase 2: drop a non-idempotent t using a witness t' != t with t't = t;
  // whatever t fixed is then fixed by t' too.
  ElementSet current = stabilizers;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = current.begin(); it != current.end(); ++it) {
      Element t = *it;
      if (is_idempotent(s, t)) continue;
      bool has_witness = std::any_of(current.begin(), current.end(), [&](Element w) {
        return w != t && s.product(w, t) == t;
      });
      if (has_witness) {
        current.erase(it);
        changed = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace semiexp
