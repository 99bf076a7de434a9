#include "sst/sliding_suffix_tree.hpp"

namespace sst {

SlidingSuffixTree::SlidingSuffixTree(std::size_t capacity)
    : window_(capacity), tree_(), ancestry_(tree_.root()), builder_(tree_.root()) {}

void SlidingSuffixTree::shift(unsigned char c) {
  window_.push(c);
  const ChainBuffer chain = builder_.add_char(tree_, window_);
  if (!chain.empty()) ancestry_.attach_chain(chain.attach_target, chain.nodes);
  if (window_.size() > window_.capacity()) evict_oldest();
}

void SlidingSuffixTree::feed(std::string_view bytes) {
  for (char c : bytes) shift(static_cast<unsigned char>(c));
}

QueryResult SlidingSuffixTree::find(std::string_view q) const { return sst::find(view(), q); }

void SlidingSuffixTree::evict_oldest() {
  const NodeId oldest = tree_.queue_head();
  SST_ENSURE(oldest.valid(), "eviction with an empty leaf queue");
  SST_ENSURE(tree_.node(oldest).suffix_start == window_.start(),
             "oldest leaf does not hold the window start");
  ++evictions_.evictions;

  ActivePoint ap = builder_.active();
  const NodeId parent = tree_.node(oldest).parent;

  if (ap.node == oldest) {
    // B was a prefix of the evicted suffix and this leaf its only finalized
    // carrier: the suffix n - |B| becomes explicit on the same leaf and B
    // loses its first character.
    ++evictions_.relabels;
    const StreamPos n = window_.n();
    const StreamPos b = ap.buffer_len;
    tree_.relabel_leaf(oldest, n - b);
    tree_.deposit_credit(parent, n - b);
    const Node& p = tree_.node(parent);
    if (p.is_root()) {
      ap = builder_.rescan(tree_, window_, parent, n - b + 1, n);
    } else {
      ap = builder_.rescan(tree_, window_, p.suffix_link, n - b + p.depth, n);
    }
    builder_.set_active(ap);
  } else {
    tree_.remove_leaf(oldest);
    const Node& p = tree_.node(parent);
    if (!p.is_root() && p.children.size() == 1) {
      ++evictions_.merges;
      if (p.credit) tree_.deposit_credit(p.parent, p.rep_pos);
      ancestry_.remove_leaf(parent);
      const NodeId survivor = tree_.merge_unary(parent);
      if (ap.node == parent) builder_.set_active({survivor, ap.buffer_len});
    }
  }
  window_.advance_start();
}

WindowStats SlidingSuffixTree::stats() const {
  return {window_.n(),          window_.start(),       window_.size(),
          active().buffer_len,  tree_.leaf_count(),    tree_.internal_count()};
}

WorkCounters SlidingSuffixTree::work() const {
  WorkCounters w;
  const auto& t = tree_.counters();
  const auto& b = builder_.counters();
  const auto& o = ancestry_.order_counters();
  w.node_creations = t.nodes_created - 1;  // the root is not shift work
  w.node_deletions = t.nodes_deleted;
  w.credit_steps = t.credit_steps;
  w.rep_fallbacks = t.rep_fallbacks;
  w.rescan_hops = b.rescan_hops;
  w.buffering_steps = b.buffering_steps;
  w.expanding_steps = b.expanding_steps;
  w.marker_ops = ancestry_.counters().marker_ops;
  w.order_relabels = o.local_relabels + o.global_relabels;
  return w;
}

}  // namespace sst
