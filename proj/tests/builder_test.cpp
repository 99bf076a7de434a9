#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace sst;
using sst::testing::build;
using sst::testing::node_for;

TEST_CASE("aab trace") {
  SlidingSuffixTree ix(8);
  ix.shift('a');
  CHECK(ix.tree().leaf_count() == 1);
  CHECK(ix.active().buffer_len == 0);

  ix.shift('a');
  CHECK(ix.tree().leaf_count() == 1);
  CHECK(ix.active().buffer_len == 1);
  CHECK(ix.active().node == ix.tree().queue_head());
  CHECK(ix.tree().node(ix.active().node).suffix_start == 0);

  ix.shift('b');
  CHECK(ix.tree().leaf_count() == 3);
  CHECK(ix.tree().internal_count() == 1);
  CHECK(ix.active().buffer_len == 0);
  CHECK(ix.active().node == ix.tree().root());
  CHECK(ix.tree().node(node_for(ix, "a")).depth == 1);
}

TEST_CASE("aaaa keeps one leaf and a three-character buffer") {
  auto ix = build(8, "aaaa");
  CHECK(ix.tree().leaf_count() == 1);
  CHECK(ix.tree().internal_count() == 0);
  CHECK(ix.active().buffer_len == 3);
  CHECK(ix.tree().node(ix.active().node).is_leaf());
  CHECK(ix.tree().node(ix.active().node).suffix_start == 0);
}

TEST_CASE("abcabdab ends with B = ab at the node spelling ab") {
  auto ix = build(16, "abcab");
  CHECK(ix.tree().internal_count() == 0);
  CHECK(ix.active().buffer_len == 2);
  ix.shift('d');
  CHECK(ix.tree().internal_count() == 2);
  ix.feed("ab");

  const NodeId ab = node_for(ix, "ab");
  CHECK(ix.active().node == ab);
  CHECK(ix.active().buffer_len == 2);
  CHECK(ix.tree().node(ab).depth == 2);
  CHECK(ix.tree().node(node_for(ix, "b")).depth == 1);
  CHECK(ix.tree().leaf_count() == 6);
  CHECK(ix.window().content().substr(6) == "ab");
}

TEST_CASE("rescan") {
  auto ix = build(16, "abcabdab");
  Builder probe(ix.tree().root());
  const NodeId b = node_for(ix, "b");

  const ActivePoint empty = probe.rescan(ix.tree(), ix.window(), ix.tree().root(), 3, 3);
  CHECK(empty.node == ix.tree().root());
  CHECK(empty.buffer_len == 0);

  const ActivePoint same = probe.rescan(ix.tree(), ix.window(), b, 5, 5);
  CHECK(same.node == b);
  CHECK(same.buffer_len == 1);

  // "abc": root -> node "ab" -> leaf 0, two hops.
  const ActivePoint two = probe.rescan(ix.tree(), ix.window(), ix.tree().root(), 0, 3);
  CHECK(probe.counters().rescan_hops == 2);
  CHECK(ix.tree().node(two.node).is_leaf());
  CHECK(ix.tree().node(two.node).suffix_start == 0);
  CHECK(two.buffer_len == 3);

  // Path that does not exist is a logic fault.
  WindowBuffer w(4);
  for (char c : std::string("zzz")) w.push(static_cast<unsigned char>(c));
  SuffixTree empty_tree;
  Builder fresh(empty_tree.root());
  CHECK_THROWS_AS(fresh.rescan(empty_tree, w, empty_tree.root(), 0, 2), InvariantError);
}

TEST_CASE("buffer length tracks the longest repeated suffix") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t cap = 1 + rng() % 64;
    const int sigma = 1 + static_cast<int>(rng() % 4);
    SlidingSuffixTree ix(cap);
    for (int i = 0; i < 400; ++i) {
      ix.shift(static_cast<unsigned char>('a' + rng() % sigma));
      REQUIRE(ix.active().buffer_len == oracle::naive_longest_repeated_suffix(ix.window().content()));
      const SuffixTree& t = ix.tree();
      for (std::size_t k = 0; k < t.arena_size(); ++k) {
        const Node& nd = t.node(NodeId(static_cast<NodeId::underlying>(k)));
        if (nd.is_internal()) REQUIRE(nd.suffix_link.valid());
      }
    }
  }
}

TEST_CASE("automaton work is linear in the stream length") {
  std::mt19937 rng(29);
  for (int sigma : {1, 2, 4, 26}) {
    for (std::size_t cap : {1u, 8u, 64u, 1024u}) {
      SlidingSuffixTree ix(cap);
      const int n = 20000;
      for (int i = 0; i < n; ++i) ix.shift(static_cast<unsigned char>('a' + rng() % sigma));
      CHECK(ix.work().automaton() <= 4u * n);
    }
  }
}
