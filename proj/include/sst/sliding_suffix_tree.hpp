#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "sst/ancestry.hpp"
#include "sst/builder.hpp"
#include "sst/query.hpp"
#include "sst/tree.hpp"
#include "sst/window_store.hpp"

namespace sst {

struct WindowStats {
  StreamPos n = 0;
  StreamPos start = 0;
  std::size_t fill = 0;
  StreamPos buffer_len = 0;
  std::size_t leaves = 0;
  std::size_t internal = 0;
};

struct EvictionCounters {
  std::uint64_t evictions = 0;
  std::uint64_t relabels = 0;  // active point sat on the evicted leaf
  std::uint64_t merges = 0;
};

// Cumulative work across all shifts.
struct WorkCounters {
  std::uint64_t node_creations = 0;
  std::uint64_t node_deletions = 0;
  std::uint64_t rescan_hops = 0;
  std::uint64_t credit_steps = 0;
  std::uint64_t marker_ops = 0;
  std::uint64_t buffering_steps = 0;
  std::uint64_t expanding_steps = 0;
  std::uint64_t order_relabels = 0;  // label rewrites inside the order list
  std::uint64_t rep_fallbacks = 0;

  // Creations, deletions, rescan hops, credit propagations and marker ops.
  std::uint64_t structural() const {
    return node_creations + node_deletions + rescan_hops + credit_steps + marker_ops;
  }
  std::uint64_t automaton() const { return buffering_steps + expanding_steps + rescan_hops; }
};

// Suffix tree over the most recent `capacity` characters of a stream.
// shift() appends then evicts; find() reports absolute positions. Not
// thread-safe: queries must not overlap a shift.
class SlidingSuffixTree {
 public:
  explicit SlidingSuffixTree(std::size_t capacity);

  void shift(unsigned char c);
  void feed(std::string_view bytes);

  QueryResult find(std::string_view q) const;

  IndexView view() const { return {window_, tree_, ancestry_, builder_.active()}; }
  const WindowBuffer& window() const { return window_; }
  const SuffixTree& tree() const { return tree_; }
  const AncestryForest& ancestry() const { return ancestry_; }
  const ActivePoint& active() const { return builder_.active(); }
  std::size_t capacity() const { return window_.capacity(); }

  WindowStats stats() const;
  WorkCounters work() const;
  const EvictionCounters& eviction_counters() const { return evictions_; }

  SuffixTree& tree_for_testing() { return tree_; }

 private:
  void evict_oldest();

  WindowBuffer window_;
  SuffixTree tree_;
  AncestryForest ancestry_;
  Builder builder_;
  EvictionCounters evictions_;
};

}  // namespace sst
