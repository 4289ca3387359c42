#include <doctest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/hvector.hpp"
#include "oracles.hpp"

#include <set>

using namespace lefschetz;

TEST_CASE("binomial saturates instead of overflowing") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("binomial expansion matches exhaustive tuple search") {
  for (std::uint64_t h = 1; h <= 60; ++h)
    for (unsigned i = 1; i <= 5; ++i) {
      const auto tuples = oracle::binomial_tuples(h, i);
      REQUIRE(tuples.size() == 1);
      CHECK(binomial_expand(h, i).parts == tuples.front());
    }
  CHECK_THROWS_AS(binomial_expand(0, 2), Error);
  CHECK_THROWS_AS(binomial_expand(3, 0), Error);
}

TEST_CASE("binomial expansion known values") {
  // 5 = C(3,2) + C(2,1)
  const auto e = binomial_expand(5, 2);
  REQUIRE(e.parts.size() == 2);
  CHECK(e.parts[0] == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(e.parts[1] == std::pair<std::uint64_t, unsigned>{2, 1});
  CHECK(macaulay_bound(5, 2) == 7);
  CHECK(macaulay_bound(3, 1) == 6);
  CHECK(macaulay_bound(0, 4) == 0);
  CHECK(macaulay_bound(1, 7) == 1);
}

TEST_CASE("Macaulay bound equals the lex-segment shadow count") {
  for (std::uint64_t h = 1; h <= 30; ++h)
    for (unsigned i = 1; i <= 4; ++i) CHECK(macaulay_bound(h, i) == oracle::lex_shadow_bound(h, i));
}

TEST_CASE("O-sequences are the degree counts of small order ideals") {
  std::set<std::vector<std::int64_t>> realized;
  oracle::for_each_order_ideal3(12, [&](const auto& cells) {
    if (cells.empty()) return;
    std::vector<std::int64_t> counts;
    for (const auto& c : cells) {
      const unsigned deg = c[0] + c[1] + c[2];
      if (counts.size() <= deg) counts.resize(deg + 1, 0);
      ++counts[deg];
    }
    realized.insert(counts);
  });
  for (const auto& h : realized) CHECK(is_O_sequence(h));
  // every sequence with h_1 <= 3 and total <= 12 that passes is realized
  std::vector<std::int64_t> cur{1};
  std::function<void(std::int64_t)> extend = [&](std::int64_t total) {
    CHECK(realized.count(cur) == 1);
    const std::int64_t cap = cur.size() == 1 ? 3 : 12;
    for (std::int64_t v = 1; v <= std::min(cap, 12 - total); ++v) {
      cur.push_back(v);
      if (is_O_sequence(cur)) extend(total + v);
      cur.pop_back();
    }
  };
  extend(1);
}

TEST_CASE("Macaulay violations") {
  const std::vector<std::int64_t> bad{1, 2, 5};
  CHECK_FALSE(is_O_sequence(bad));
  CHECK(first_macaulay_violation(bad) == std::optional<std::size_t>(2));
  CHECK(first_macaulay_violation(std::vector<std::int64_t>{2, 1}) == std::optional<std::size_t>(0));
  CHECK(first_macaulay_violation(std::vector<std::int64_t>{1, 3, 6, 10, 15}) == std::nullopt);
  CHECK(first_macaulay_violation(std::vector<std::int64_t>{1, 1, 2}) == std::optional<std::size_t>(2));
  CHECK(is_O_sequence(std::vector<std::int64_t>{1, 3, 5, 7, 0}));
  CHECK_FALSE(is_O_sequence(std::vector<std::int64_t>{1, 3, 0, 1}));
}

TEST_CASE("HVector parsing and trimming") {
  CHECK(HVector::parse("1,3,5").entries() == std::vector<std::int64_t>{1, 3, 5});
  CHECK(HVector::parse("[1, 3, 5, 0]").size() == 3);
  CHECK(HVector::parse("1,2").socle_degree() == 1);
  CHECK(HVector{1, 2}[7] == 0);
  CHECK(HVector{1, 3, 1}.to_string() == "1,3,1");
  CHECK_THROWS_AS(HVector::parse("1,,2"), Error);
  CHECK_THROWS_AS(HVector::parse("1,-2"), Error);
  CHECK_THROWS_AS(HVector::parse("x"), Error);
  CHECK_THROWS_AS(HVector::parse(""), Error);
  CHECK_THROWS_AS(HVector({1, -1}), Error);
}

TEST_CASE("shape predicates") {
  using V = std::vector<std::int64_t>;
  CHECK(is_unimodal(V{1, 3, 3, 2}));
  CHECK_FALSE(is_unimodal(V{1, 3, 2, 3}));
  CHECK(is_symmetric(V{1, 4, 4, 1}));
  CHECK_FALSE(is_symmetric(V{1, 4, 3, 1}));
  CHECK(is_differentiable(V{1, 3, 5, 7}));
  CHECK_FALSE(is_differentiable(V{1, 3, 4, 3}));
  CHECK(first_difference(V{1, 3, 5, 5}) == V{1, 2, 2, 0});
}

TEST_CASE("SI-sequences") {
  CHECK_FALSE(is_SI(HVector{1, 13, 12, 13, 1}));
  CHECK(is_SI(HVector{1, 3, 5, 5, 3, 1}));
  CHECK(is_SI(HVector{1}));
  CHECK(is_SI(HVector{1, 1, 1, 1}));
  CHECK_FALSE(is_SI(HVector{2, 2}));
  // first-half differences (1,3,6,1) and (1,1,2)
  CHECK(is_SI(HVector{1, 4, 10, 11, 10, 4, 1}));
  CHECK_FALSE(is_SI(HVector{1, 2, 4, 4, 2, 1}));
  CHECK_FALSE(is_SI(HVector{1, 3, 5, 4, 5, 3, 1}));
}

TEST_CASE("hbar stabilizes at the first non-increase") {
  const auto hb = hbar(HVector{1, 3, 5, 5, 3, 1});
  CHECK(hb.t == 2);
  CHECK(hb.s == 5);
  CHECK(hb.truncated(6) == std::vector<std::int64_t>{1, 3, 5, 5, 5, 5});
  const auto one = hbar(HVector{1});
  CHECK(one.t == 0);
  CHECK(one.s == 1);
  const auto flat = hbar(HVector{1, 2, 2, 2, 1});
  CHECK(flat.t == 1);
  CHECK(flat.at(10) == 2);
  CHECK_THROWS_AS(hbar(HVector{1, 13, 12, 13, 1}), Error);
}
