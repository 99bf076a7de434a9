#pragma once

#include <cstdint>
#include <vector>

#include "sst/common.hpp"
#include "sst/tree.hpp"
#include "sst/window_store.hpp"

namespace sst {

// (β, |B|): B is the window's last buffer_len characters and ends on the
// edge entering `node` (or exactly at it). buffer_len == 0 iff node is root.
struct ActivePoint {
  NodeId node;
  StreamPos buffer_len = 0;
};

// Branching nodes created by one expanding cascade, in creation order.
// nodes[k] links to nodes[k+1]; the last links to attach_target.
struct ChainBuffer {
  std::vector<NodeId> nodes;
  NodeId attach_target;

  bool empty() const { return nodes.empty(); }
};

struct BuilderCounters {
  std::uint64_t buffering_steps = 0;
  std::uint64_t expanding_steps = 0;
  std::uint64_t rescan_hops = 0;
};

// Online construction automaton. Consumes the character most recently
// pushed into the window and keeps the active point current.
class Builder {
 public:
  explicit Builder(NodeId root) : active_{root, 0} {}

  ChainBuffer add_char(SuffixTree& tree, const WindowBuffer& w);

  // Skip/count descent from `from` (at-node) over window characters [lo, hi).
  // The path must exist; only first characters and depths are consulted.
  ActivePoint rescan(const SuffixTree& tree, const WindowBuffer& w, NodeId from, StreamPos lo,
                     StreamPos hi);

  const ActivePoint& active() const { return active_; }
  void set_active(ActivePoint ap) { active_ = ap; }

  const BuilderCounters& counters() const { return counters_; }

 private:
  ActivePoint active_;
  BuilderCounters counters_;
};

}  // namespace sst
