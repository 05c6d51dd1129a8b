#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tracerec/alignment.hpp"
#include "tracerec/error.hpp"

using namespace tracerec;
using oracle::bits;

TEST_CASE("edit distance examples") {
  CHECK(edit_distance(bits("0101"), bits("0101")) == 0);
  CHECK(edit_distance(bits("0101"), bits("011")) == 1);
  CHECK(edit_distance(bits("00"), bits("11")) == 4);
  CHECK(edit_distance(bits(""), bits("101")) == 3);
  CHECK_THROWS_AS(edit_distance(bits("01"), Seq(Alphabet(4), {0, 1})), AlphabetMismatch);
}

TEST_CASE("edit distance agrees with subsequence enumeration") {
  std::mt19937_64 g(11);
  for (int rep = 0; rep < 400; ++rep) {
    const std::uint32_t sigma = rep % 3 == 0 ? 4 : 2;
    const auto a = oracle::random_sym(g, g() % 11, sigma);
    const auto b = oracle::random_sym(g, g() % 11, sigma);
    const std::size_t want = a.size() + b.size() - 2 * oracle::lcs_enumerate(a, b);
    CHECK(edit_distance(oracle::seq(a, sigma), oracle::seq(b, sigma)) == want);
  }
}

TEST_CASE("optimal alignment examples") {
  const auto a = optimal_alignment(bits("01"), bits("01"));
  CHECK(a.pairs().size() == 2);
  CHECK(a.pairs()[0] == AlignedPair{1, 1});
  CHECK(a.pairs()[1] == AlignedPair{2, 2});
  CHECK(a.cost() == 0);

  const auto e = optimal_alignment(bits("0"), bits(""));
  CHECK(e.len() == 0);
  CHECK(e.cost() == 1);

  const auto x = bits("0101"), y = bits("011");
  const auto m = optimal_alignment(x, y);
  CHECK(m.cost() == 1);
  CHECK(m.valid_for(x, y));
}

TEST_CASE("optimal alignment traceback prefers match, then skipping x") {
  // "01" vs "10": both single matches cost 2; from (2,2) x[2]=1 != y[2]=0, skip x first,
  // then x[1]=0 matches y[2]=0.
  const auto a = optimal_alignment(bits("01"), bits("10"));
  REQUIRE(a.len() == 1);
  CHECK(a.pairs()[0] == AlignedPair{1, 2});
}

TEST_CASE("optimal alignment is valid and optimal on random inputs") {
  std::mt19937_64 g(12);
  for (int rep = 0; rep < 300; ++rep) {
    const std::uint32_t sigma = rep % 2 ? 2 : 3;
    const auto a = oracle::random_sym(g, g() % 40, sigma);
    auto b = a;
    // Sprinkle edits so the band logic sees a range of distances.
    const std::size_t edits = g() % 12;
    for (std::size_t e = 0; e < edits; ++e) {
      if (!b.empty() && g() % 2) {
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(g() % b.size()));
      } else {
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(g() % (b.size() + 1)), static_cast<std::uint16_t>(g() % sigma));
      }
    }
    const Seq x = oracle::seq(a, sigma), y = oracle::seq(b, sigma);
    const auto m = optimal_alignment(x, y);
    CHECK(m.valid_for(x, y));
    CHECK(m.cost() == oracle::ed(a, b));
  }
}

TEST_CASE("long inputs: alignment cost equals distance") {
  std::mt19937_64 g(13);
  const auto a = oracle::random_sym(g, 3000, 2);
  auto b = a;
  for (int e = 0; e < 60; ++e) b.erase(b.begin() + static_cast<std::ptrdiff_t>(g() % b.size()));
  for (int e = 0; e < 60; ++e) b.insert(b.begin() + static_cast<std::ptrdiff_t>(g() % b.size()), static_cast<std::uint16_t>(g() % 2));
  const Seq x = oracle::seq(a), y = oracle::seq(b);
  const auto m = optimal_alignment(x, y);
  CHECK(m.valid_for(x, y));
  CHECK(m.cost() == oracle::ed(a, b));
  CHECK(edit_distance(x, y) == m.cost());
}

TEST_CASE("alignments reject non-monotone or out-of-range pairs") {
  CHECK_THROWS_AS(Alignment(3, 3, {{2, 2}, {1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Alignment(3, 3, {{1, 1}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Alignment(3, 3, {{4, 1}}), OutOfRange);
}

TEST_CASE("map_substring and cost_on_substring") {
  const auto id = Alignment::identity(8);
  CHECK(map_substring(id, 2, 5) == Interval{2, 5});
  CHECK(cost_on_substring(id, 3, 7) == 0);

  const Alignment a(4, 2, {{1, 1}, {4, 2}});
  CHECK(map_substring(a, 1, 4) == Interval{1, 2});
  CHECK(map_substring(a, 2, 3).empty());
  CHECK(cost_on_substring(a, 2, 3) == 2);

  const auto x = bits("0101"), y = bits("011");
  const auto m = optimal_alignment(x, y);
  CHECK(cost_on_substring(m, 1, 4) == 1);
  CHECK_THROWS_AS(map_substring(id, 0, 2), OutOfRange);
  CHECK_THROWS_AS(map_substring(id, 5, 9), OutOfRange);
}

TEST_CASE("cost_on_substring over the whole source is the full cost") {
  std::mt19937_64 g(14);
  for (int rep = 0; rep < 100; ++rep) {
    const auto a = oracle::random_sym(g, 1 + g() % 20, 2);
    const auto b = oracle::random_sym(g, 1 + g() % 20, 2);
    const auto m = optimal_alignment(oracle::seq(a), oracle::seq(b));
    if (m.len() == 0) continue;
    // Unmatched target symbols outside the image span are not charged.
    const auto pairs = m.pairs();
    const std::size_t outside = (pairs.front().j - 1) + (b.size() - pairs.back().j);
    CHECK(cost_on_substring(m, 1, a.size()) + outside == m.cost());
  }
}

TEST_CASE("invert and compose") {
  CHECK(invert(Alignment::identity(5)) == Alignment::identity(5));
  CHECK(invert(Alignment::empty(3, 4)) == Alignment::empty(4, 3));
  const Alignment a(3, 4, {{1, 2}, {3, 4}});
  CHECK(invert(a) == Alignment(4, 3, {{2, 1}, {4, 3}}));
  CHECK(compose(Alignment::identity(4), Alignment::identity(4)) == Alignment::identity(4));

  const auto back = compose(a, invert(a));
  CHECK(back.len() == a.len());
  for (const auto& p : back.pairs()) CHECK(p.i == p.j);
  CHECK_THROWS_AS(compose(a, Alignment::identity(3)), InvalidArgument);
}

TEST_CASE("compose equals the relational join") {
  std::mt19937_64 g(15);
  const auto random_alignment = [&](std::size_t n, std::size_t m) {
    std::vector<AlignedPair> pairs;
    std::size_t j = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (g() % 3 == 0) continue;
      j += 1 + g() % 2;
      if (j > m) break;
      pairs.push_back({i, j});
    }
    return Alignment(n, m, pairs);
  };
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = g() % 15, m = g() % 15, k = g() % 15;
    const auto a = random_alignment(n, m);
    const auto b = random_alignment(m, k);
    std::set<std::pair<std::size_t, std::size_t>> want;
    for (const auto& p : a.pairs()) {
      for (const auto& q : b.pairs()) {
        if (p.j == q.i) want.insert({p.i, q.j});
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> got;
    const auto ab = compose(a, b);
    for (const auto& p : ab.pairs()) got.insert({p.i, p.j});
    CHECK(got == want);
  }
}

TEST_CASE("image table and image agree") {
  const Alignment a(5, 6, {{1, 2}, {3, 3}, {5, 6}});
  const auto t = a.image_table();
  for (std::size_t i = 1; i <= 5; ++i) {
    const auto img = a.image(i);
    CHECK(t[i] == (img ? *img : 0));
  }
}
