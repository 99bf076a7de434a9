#include "sst/tree.hpp"

#include <algorithm>

namespace sst {

// ---------------------------------------------------------------------------
// ChildTable

std::size_t ChildTable::locate(unsigned char c) const {
  if (index_) {
    std::uint16_t s = (*index_)[c];
    return s == kNoSlot ? entries_.size() : s;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].key == c) return i;
  }
  return entries_.size();
}

void ChildTable::build_index() {
  index_ = std::make_unique<std::array<std::uint16_t, 256>>();
  index_->fill(kNoSlot);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    (*index_)[entries_[i].key] = static_cast<std::uint16_t>(i);
  }
}

NodeId ChildTable::find(unsigned char c) const {
  std::size_t i = locate(c);
  return i < entries_.size() ? entries_[i].child : NodeId::none();
}

void ChildTable::insert(unsigned char c, NodeId child) {
  SST_ENSURE(locate(c) == entries_.size(), "duplicate branch character");
  entries_.push_back({c, child});
  if (index_) {
    (*index_)[c] = static_cast<std::uint16_t>(entries_.size() - 1);
  } else if (entries_.size() > kDirectThreshold) {
    build_index();
  }
}

void ChildTable::replace(unsigned char c, NodeId child) {
  std::size_t i = locate(c);
  SST_ENSURE(i < entries_.size(), "replace of a missing branch");
  entries_[i].child = child;
}

void ChildTable::erase(unsigned char c) {
  std::size_t i = locate(c);
  SST_ENSURE(i < entries_.size(), "erase of a missing branch");
  std::size_t last = entries_.size() - 1;
  if (i != last) {
    entries_[i] = entries_[last];
    if (index_) (*index_)[entries_[i].key] = static_cast<std::uint16_t>(i);
  }
  entries_.pop_back();
  if (index_) (*index_)[c] = kNoSlot;
}

void ChildTable::clear() {
  entries_.clear();
  index_.reset();
}

// ---------------------------------------------------------------------------
// SuffixTree

SuffixTree::SuffixTree() {
  root_ = allocate(NodeKind::kRoot);
  Node& r = at(root_);
  r.parent = NodeId::none();
  r.suffix_link = root_;
  r.depth = 0;
  counters_ = {};
}

const Node& SuffixTree::node(NodeId id) const {
  SST_ENSURE(id.valid() && id.index() < nodes_.size(), "dangling node handle");
  return nodes_[id.index()];
}

Node& SuffixTree::at(NodeId id) {
  SST_ENSURE(id.valid() && id.index() < nodes_.size(), "dangling node handle");
  return nodes_[id.index()];
}

NodeId SuffixTree::allocate(NodeKind kind) {
  NodeId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = NodeId(static_cast<NodeId::underlying>(nodes_.size()));
    nodes_.emplace_back();
  }
  Node& nd = nodes_[id.index()];
  nd = Node{};
  nd.kind = kind;
  if (kind == NodeKind::kLeaf) ++leaves_;
  if (kind == NodeKind::kInternal) ++internals_;
  ++counters_.nodes_created;
  return id;
}

void SuffixTree::release(NodeId id) {
  Node& nd = at(id);
  if (nd.kind == NodeKind::kLeaf) --leaves_;
  if (nd.kind == NodeKind::kInternal) --internals_;
  nd.children.clear();
  nd.kind = NodeKind::kFree;
  free_.push_back(id);
  ++counters_.nodes_deleted;
}

NodeId SuffixTree::child(NodeId v, unsigned char c) const {
  const Node& nd = node(v);
  SST_ENSURE(!nd.is_leaf(), "child() called on a leaf");
  return nd.children.find(c);
}

StreamPos SuffixTree::string_depth(NodeId v, StreamPos n) const {
  const Node& nd = node(v);
  return nd.is_leaf() ? n - nd.suffix_start : nd.depth;
}

void SuffixTree::queue_append(NodeId leaf) {
  Node& nd = at(leaf);
  nd.queue_prev = queue_tail_;
  nd.queue_next = NodeId::none();
  if (queue_tail_) {
    at(queue_tail_).queue_next = leaf;
  } else {
    queue_head_ = leaf;
  }
  queue_tail_ = leaf;
}

void SuffixTree::queue_unlink(NodeId leaf) {
  Node& nd = at(leaf);
  if (nd.queue_prev) {
    at(nd.queue_prev).queue_next = nd.queue_next;
  } else {
    queue_head_ = nd.queue_next;
  }
  if (nd.queue_next) {
    at(nd.queue_next).queue_prev = nd.queue_prev;
  } else {
    queue_tail_ = nd.queue_prev;
  }
  nd.queue_prev = nd.queue_next = NodeId::none();
}

NodeId SuffixTree::insert_leaf(NodeId parent, StreamPos suffix_start, const WindowBuffer& w) {
  SST_ENSURE(!node(parent).is_leaf(), "leaf cannot parent a leaf");
  const StreamPos parent_depth = node(parent).depth;
  const unsigned char c = w.char_at(suffix_start + parent_depth);
  SST_ENSURE(!node(parent).children.find(c), "duplicate branch character");

  NodeId leaf = allocate(NodeKind::kLeaf);
  Node& nd = at(leaf);
  nd.parent = parent;
  nd.first_char = c;
  nd.suffix_start = suffix_start;
  at(parent).children.insert(c, leaf);
  queue_append(leaf);
  deposit_credit(parent, suffix_start);
  return leaf;
}

NodeId SuffixTree::split_edge(NodeId v, StreamPos split_depth, StreamPos occurrence,
                              const WindowBuffer& w) {
  const Node& lower = node(v);
  SST_ENSURE(!lower.is_root(), "cannot split above the root");
  const NodeId parent = lower.parent;
  const StreamPos parent_depth = node(parent).depth;
  const StreamPos lower_depth = string_depth(v, w.n());
  SST_ENSURE(parent_depth < split_depth && split_depth < lower_depth,
             "split depth outside the open edge interval");

  const unsigned char upper_char = lower.first_char;
  const unsigned char branch_char = edge_char(v, split_depth, w);

  NodeId gamma = allocate(NodeKind::kInternal);
  Node& g = at(gamma);
  g.parent = parent;
  g.first_char = upper_char;
  g.depth = split_depth;
  g.rep_pos = occurrence;
  g.children.insert(branch_char, v);

  Node& l = at(v);
  l.parent = gamma;
  l.first_char = branch_char;
  at(parent).children.replace(upper_char, gamma);
  return gamma;
}

NodeId SuffixTree::merge_unary(NodeId pi) {
  const Node& p = node(pi);
  SST_ENSURE(p.is_internal(), "merge_unary on root or leaf");
  SST_ENSURE(p.children.size() == 1, "merge_unary needs exactly one child");
  const NodeId sigma = p.children.entries().front().child;
  const NodeId grand = p.parent;
  const unsigned char c = p.first_char;

  at(grand).children.replace(c, sigma);
  Node& s = at(sigma);
  s.first_char = c;
  s.parent = grand;
  release(pi);
  return sigma;
}

void SuffixTree::remove_leaf(NodeId leaf) {
  const Node& nd = node(leaf);
  SST_ENSURE(nd.is_leaf(), "remove_leaf on a non-leaf");
  at(nd.parent).children.erase(nd.first_char);
  queue_unlink(leaf);
  release(leaf);
}

void SuffixTree::relabel_leaf(NodeId leaf, StreamPos new_start) {
  SST_ENSURE(node(leaf).is_leaf(), "relabel_leaf on a non-leaf");
  queue_unlink(leaf);
  at(leaf).suffix_start = new_start;
  queue_append(leaf);
}

void SuffixTree::set_suffix_link(NodeId v, NodeId target) {
  SST_ENSURE(node(v).is_internal(), "suffix links live on internal nodes");
  at(v).suffix_link = target;
}

void SuffixTree::deposit_credit(NodeId v, StreamPos fresh) {
  while (v != root_) {
    Node& nd = at(v);
    ++counters_.credit_steps;
    if (fresh > nd.rep_pos) {
      nd.rep_pos = fresh;
    } else {
      fresh = nd.rep_pos;
    }
    if (!nd.credit) {
      nd.credit = true;
      return;
    }
    nd.credit = false;
    v = nd.parent;
  }
}

NodeId SuffixTree::descend_to_leaf(NodeId v) const {
  while (!node(v).is_leaf()) v = node(v).children.entries().front().child;
  return v;
}

unsigned char SuffixTree::edge_char(NodeId v, StreamPos string_offset, const WindowBuffer& w) {
  Node& nd = at(v);
  if (nd.is_leaf()) return w.char_at(nd.suffix_start + string_offset);
  SST_ENSURE(!nd.is_root(), "the root has no incoming edge");
  if (nd.rep_pos < w.start()) {
    ++counters_.rep_fallbacks;
    nd.rep_pos = node(descend_to_leaf(v)).suffix_start;
  }
  return w.char_at(nd.rep_pos + string_offset);
}

void SuffixTree::corrupt_first_char_for_testing(NodeId v, unsigned char c) {
  at(v).first_char = c;
}

}  // namespace sst
