#include <doctest.h>

#include "support.hpp"

using namespace semiexp;
using namespace tsupport;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

// Hand oracle: all triples.
bool associative(std::size_t m, const RawTable& t) {
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

}  // namespace

TEST_CASE("validate_table accepts the small examples") {
  CHECK(validate_table(1, {{0}})->size() == 1);
  auto n2 = validate_table(2, {{0, 0}, {0, 0}});
  CHECK(n2->product(1, 1) == 0);
  auto r2 = validate_table(2, {{0, 1}, {0, 1}});
  for (Element s = 0; s < 2; ++s)
    for (Element t = 0; t < 2; ++t) CHECK(r2->product(s, t) == t);
}

TEST_CASE("validate_table errors") {
  CHECK(code_of([] { validate_table(2, {{0, 2}, {0, 1}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_table(2, {{0, -1}, {0, 1}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_table(2, {{0, 1}}); }) == ErrorCode::OutOfRange);
  // 1*0 = 1, 0*1 = 0: (1 0) 1 = 1*1 = 0 but 1 (0 1) = 1*0 = 1
  try {
    validate_table(2, {{0, 0}, {1, 0}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    CHECK(std::string(e.what()).find("(1,0,1)") != std::string::npos);
  }
}

TEST_CASE("classify examples") {
  auto r2 = classify(*right_zero(2));
  CHECK(r2.is_regular);
  CHECK_FALSE(r2.is_inverse);
  CHECK_FALSE(r2.is_monoid);
  CHECK(r2.has_left_identity_element);
  CHECK(r2.idempotents == ElementSet{0, 1});

  auto z2 = classify(*zn(2));
  CHECK(z2.is_monoid);
  CHECK(z2.is_cancellative);
  CHECK(z2.is_inverse);
  CHECK(z2.idempotents == ElementSet{0});
  CHECK(z2.identity == Element{0});

  auto n2 = classify(*null_sg(2));
  CHECK_FALSE(n2.is_regular);
  CHECK(n2.idempotents == ElementSet{0});

  auto c3 = classify(*tmin(3));
  CHECK(c3.is_inverse);
  CHECK(c3.identity == Element{2});
}

TEST_CASE("minimal_left_cover examples") {
  auto r2 = minimal_left_cover(*right_zero(2));
  REQUIRE(r2);
  CHECK(r2->elements == ElementSet{0});
  CHECK(r2->minimal);
  CHECK_FALSE(minimal_left_cover(*null_sg(2)));
  auto l2 = minimal_left_cover(*left_zero(2));
  REQUIRE(l2);
  CHECK(l2->elements == ElementSet{0, 1});
}

TEST_CASE("minimal_left_cover matches exhaustive subsets") {
  // Oracle: smallest subset by brute force over all 2^m subsets.
  for (const auto& s : {right_zero(3), left_zero(3), zn(4), tmin(4), null_sg(3),
                        direct_product(*zn(2), *left_zero(2))}) {
    std::size_t            m = s->size();
    std::optional<std::size_t> best;
    for (std::size_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<bool> hit(m, false);
      for (Element t = 0; t < m; ++t)
        if (mask & (1u << t))
          for (Element u = 0; u < m; ++u) hit[s->product(t, u)] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
        auto c = static_cast<std::size_t>(__builtin_popcount(mask));
        if (!best || c < *best) best = c;
      }
    }
    auto cover = minimal_left_cover(*s);
    CHECK(cover.has_value() == best.has_value());
    if (cover) {
      CHECK(cover->elements.size() == *best);
      CHECK(is_left_cover(*s, cover->elements));
    }
  }
}

TEST_CASE("reduce_to_idempotents examples") {
  CHECK(reduce_to_idempotents(*right_zero(2), {0}) == ElementSet{0});
  CHECK(reduce_to_idempotents(*zn(2), {0, 1}) == ElementSet{0});
  // Rees over the trivial group with P = [[e, 0]]: column i = 1 of P is zero.
  auto s = rees_build(rees(zn(1), 2, 1, {{Element{0}, std::nullopt}}));
  auto k = minimal_left_cover(*s);
  REQUIRE(k);
  CHECK_FALSE(reduce_to_idempotents(*s, k->elements));
  CHECK_THROWS_AS(reduce_to_idempotents(*null_sg(2), {0}), Error);
}

TEST_CASE("property: covers, idempotent reductions and structure flags") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto s     = random_semigroup(rng);
    auto flags = classify(*s);
    auto cover = minimal_left_cover(*s);
    CHECK(cover.has_value() == is_expansive_semigroup(*s));
    if (cover) {
      CHECK(is_left_cover(*s, cover->elements));
      if (auto f = reduce_to_idempotents(*s, cover->elements)) {
        for (auto e : *f) CHECK(is_idempotent(*s, e));
        CHECK(is_left_cover(*s, *f));
      }
    }
    if (flags.is_inverse) CHECK(flags.is_regular);
    if (flags.is_monoid) CHECK(flags.has_left_identity_element);
    if (flags.is_cancellative) CHECK(flags.is_monoid);
    for (auto e : flags.idempotents) CHECK(s->product(e, e) == e);
    if (solve_left_identity<Rational>(s)) CHECK(cover.has_value());
  }
}

TEST_CASE("every table of order <= 3 is classified consistently") {
  std::size_t associative_count = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::size_t cells = m * m, total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= m;
    for (std::size_t code = 0; code < total; ++code) {
      RawTable t(m, std::vector<std::int64_t>(m));
      std::size_t c = code;
      for (std::size_t i = 0; i < cells; ++i, c /= m) t[i / m][i % m] = static_cast<std::int64_t>(c % m);
      bool assoc = associative(m, t);
      CHECK(first_nonassociative_triple(m, t).has_value() == !assoc);
      if (!assoc) continue;
      ++associative_count;
      auto s = validate_table(m, t);
      CHECK(minimal_left_cover(*s).has_value() == is_expansive_semigroup(*s));
    }
  }
  // 1 + 8 + 113 associative tables on labelled sets of size 1, 2, 3
  CHECK(associative_count == 122);
}
