#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace sst;
using sst::testing::brute;
using sst::testing::build;
using sst::testing::node_for;
using sst::testing::sorted;
using Positions = std::vector<StreamPos>;

TEST_CASE("find on abcabdab: b via suffix-link ancestry") {
  auto ix = build(8, "abcabdab");
  const QueryResult r = ix.find("b");
  CHECK(r.positions == Positions{1, 4, 7});
  CHECK(r.buffer_case == BufferCase::kLinkAncestry);
  CHECK(r.buffer_hits == 1);
  CHECK(r.positions == brute(ix, "b"));
}

TEST_CASE("find on aaaa: aa via periodic scan") {
  auto ix = build(8, "aaaa");
  const QueryResult r = ix.find("aa");
  CHECK(r.positions == Positions{0, 1, 2});
  CHECK(r.buffer_case == BufferCase::kPeriodicScan);
  CHECK(r.buffer_hits == 2);
}

TEST_CASE("find on abcab: ab with |B| == |Q|") {
  auto ix = build(8, "abcab");
  const QueryResult r = ix.find("ab");
  CHECK(r.positions == Positions{0, 3});
  CHECK(r.buffer_case == BufferCase::kEqual);
  CHECK(r.buffer_hits == 1);
}

TEST_CASE("find rejects an empty query") {
  auto ix = build(8, "abc");
  CHECK_THROWS_AS(ix.find(""), std::invalid_argument);
}

TEST_CASE("locate_locus") {
  auto ix = build(8, "abcabdab");
  const auto ab = locate_locus(ix.view(), "ab");
  REQUIRE(ab);
  CHECK(ix.tree().node(ab->node).is_internal());
  CHECK(ix.tree().node(ab->node).depth == 2);

  const auto abc = locate_locus(ix.view(), "abc");
  REQUIRE(abc);
  CHECK(ix.tree().node(abc->node).is_leaf());
  CHECK(ix.tree().node(abc->node).suffix_start == 0);

  CHECK_FALSE(locate_locus(ix.view(), "zz"));
  // Longer than any stored suffix.
  CHECK_FALSE(locate_locus(ix.view(), "abcabdabx"));
}

TEST_CASE("blind descent needs verification") {
  // "axc" follows the same first characters and depths as "abc" when the
  // only branch under 'a' skips the middle character.
  auto ix = build(8, "abcabdab");
  const auto locus = locate_locus(ix.view(), "axc");
  REQUIRE(locus);
  CHECK_FALSE(verify_locus(ix.view(), *locus, "axc"));
  CHECK(ix.find("axc").positions.empty());
}

TEST_CASE("collect_finalized") {
  auto s1 = build(8, "abcabdab");
  CHECK(sorted(collect_finalized(s1.view(), *locate_locus(s1.view(), "b"))) == Positions{1, 4});
  CHECK(collect_finalized(s1.view(), *locate_locus(s1.view(), "abcabdab")) == Positions{0});

  auto s2 = build(8, "aaaa");
  CHECK(collect_finalized(s2.view(), *locate_locus(s2.view(), "aa")) == Positions{0});
}

TEST_CASE("buffer_occurrences by case") {
  auto s1 = build(8, "abcabdab");
  {
    const Locus l = *locate_locus(s1.view(), "ab");
    BufferCase bc{};
    const auto got = buffer_occurrences(s1.view(), l, "ab", collect_subtree(s1.view(), l), nullptr, &bc);
    CHECK(bc == BufferCase::kEqual);
    CHECK(got == Positions{6});
  }
  {
    const Locus l = *locate_locus(s1.view(), "b");
    const auto got = buffer_occurrences(s1.view(), l, "b", collect_subtree(s1.view(), l));
    CHECK(got == Positions{7});
  }
  {
    const Locus l = *locate_locus(s1.view(), "abc");
    BufferCase bc{};
    CHECK(buffer_occurrences(s1.view(), l, "abc", collect_subtree(s1.view(), l), nullptr, &bc).empty());
    CHECK(bc == BufferCase::kShorter);
  }

  auto s2 = build(8, "aaaa");
  const Locus l = *locate_locus(s2.view(), "aa");
  CHECK(buffer_occurrences(s2.view(), l, "aa", collect_subtree(s2.view(), l)) == Positions{1, 2});
}

TEST_CASE("periodic leaves case: period longer than the query") {
  // "abcdabcdab": B = "abcdab", x = 0, p = 4 > |Q| = 2.
  auto ix = build(16, "abcdabcdab");
  REQUIRE(ix.tree().node(ix.active().node).is_leaf());
  const auto period = period_info(ix.view());
  REQUIRE(period);
  CHECK(period->x == 0);
  CHECK(period->p == 4);
  const QueryResult r = ix.find("bc");
  CHECK(r.buffer_case == BufferCase::kPeriodicLeaves);
  CHECK(r.positions == Positions{1, 5});
  CHECK(ix.find("da").positions == Positions{3, 7});
  CHECK(ix.find("ab").positions == Positions{0, 4, 8});
}

TEST_CASE("link ancestry hit at i = 0") {
  // B starts with Q itself: the active node is in the locus subtree.
  auto ix = build(16, "abxabyab");
  const QueryResult r = ix.find("a");
  CHECK(r.positions == brute(ix, "a"));
  CHECK(r.buffer_case == BufferCase::kLinkAncestry);
}

TEST_CASE("equivalence with the naive scan and structural properties") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t cap = 1 + rng() % 64;
    const int sigma = 1 + static_cast<int>(rng() % 4);
    SlidingSuffixTree ix(cap);
    const int len = static_cast<int>(rng() % 400);
    for (int i = 0; i < len; ++i) ix.shift(static_cast<unsigned char>('a' + rng() % sigma));
    const std::string text = ix.window().content();
    if (text.empty()) continue;
    for (int k = 0; k < 20; ++k) {
      const std::size_t a = rng() % text.size();
      std::string q = text.substr(a, 1 + rng() % std::min<std::size_t>(10, text.size() - a));
      if (rng() % 4 == 0) q[rng() % q.size()] = static_cast<char>('a' + rng() % (sigma + 1));
      const QueryResult r = ix.find(q);
      const Positions expected = brute(ix, q);
      REQUIRE(r.positions == expected);
      // No duplicates were emitted.
      REQUIRE(std::set<StreamPos>(r.positions.begin(), r.positions.end()).size() == r.positions.size());
      // Minimal occurrence: any hit implies a finalized one.
      const StreamPos b = ix.active().buffer_len;
      if (!expected.empty()) {
        REQUIRE(expected.front() < ix.window().n() - b);
        REQUIRE(locate_locus(ix.view(), q));
      }
      const auto bound = 6 * (q.size() + r.positions.size() + 1);
      REQUIRE(r.counters.total() <= bound);
    }
  }
}

TEST_CASE("linear_match finds overlapping hits") {
  WindowBuffer w(16);
  for (char c : std::string("aaaaa")) w.push(static_cast<unsigned char>(c));
  CHECK(linear_match(w, 0, 5, "aa") == Positions{0, 1, 2, 3});
  CHECK(linear_match(w, 1, 3, "aaa").empty());
}
