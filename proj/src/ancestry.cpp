#include "sst/ancestry.hpp"

namespace sst {

AncestryForest::AncestryForest(NodeId root) : root_(root) {
  Entry& r = slot(root);
  r.present = true;
  r.depth = 0;
  r.parent = NodeId::none();
  r.open = order_.insert_first();
  r.close = order_.insert_after(r.open);
  own(r.open, root, true);
  own(r.close, root, false);
  members_ = 1;
}

AncestryForest::Entry& AncestryForest::slot(NodeId v) {
  if (v.index() >= entries_.size()) entries_.resize(v.index() + 1);
  return entries_[v.index()];
}

const AncestryForest::Entry& AncestryForest::entry(NodeId v) const {
  SST_ENSURE(contains(v), "node is not in the suffix-links tree");
  return entries_[v.index()];
}

void AncestryForest::own(OrderList::Handle h, NodeId v, bool opening) {
  if (h >= owners_.size()) owners_.resize(h + 1);
  owners_[h] = {v, opening};
}

bool AncestryForest::contains(NodeId v) const {
  return v.valid() && v.index() < entries_.size() && entries_[v.index()].present;
}

void AncestryForest::attach_chain(NodeId parent, std::span<const NodeId> chain) {
  SST_ENSURE(contains(parent), "attach target is not in the suffix-links tree");
  NodeId above = parent;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const NodeId v = *it;
    SST_ENSURE(!contains(v), "node attached twice");
    const OrderList::Handle anchor = entries_[above.index()].open;
    const std::uint64_t depth = entries_[above.index()].depth + 1;
    ++entries_[above.index()].children;

    const OrderList::Handle open = order_.insert_after(anchor);
    const OrderList::Handle close = order_.insert_after(open);
    Entry& e = slot(v);
    e.present = true;
    e.open = open;
    e.close = close;
    e.depth = depth;
    e.parent = above;
    e.children = 0;
    own(open, v, true);
    own(close, v, false);
    ++members_;
    ++counters_.attached;
    counters_.marker_ops += 2;
    above = v;
  }
}

void AncestryForest::remove_leaf(NodeId v) {
  SST_ENSURE(v != root_, "the root never leaves the suffix-links tree");
  const Entry& e = entry(v);
  SST_ENSURE(e.children == 0, "removed node is the target of a suffix link");
  order_.erase(e.open);
  order_.erase(e.close);
  --entries_[e.parent.index()].children;
  entries_[v.index()] = Entry{};
  --members_;
  ++counters_.removed;
  counters_.marker_ops += 2;
}

bool AncestryForest::is_ancestor(NodeId a, NodeId b) const {
  if (a == b) return true;
  const Entry& ea = entry(a);
  const Entry& eb = entry(b);
  return order_.precedes(ea.open, eb.open) && order_.precedes(eb.close, ea.close);
}

std::uint64_t AncestryForest::link_distance(NodeId a, NodeId b) const {
  SST_ENSURE(is_ancestor(a, b), "link_distance needs an ancestor pair");
  return entry(b).depth - entry(a).depth;
}

std::uint64_t AncestryForest::link_depth(NodeId v) const { return entry(v).depth; }
NodeId AncestryForest::link_parent(NodeId v) const { return entry(v).parent; }
std::uint32_t AncestryForest::link_children(NodeId v) const { return entry(v).children; }

std::vector<AncestryForest::Marker> AncestryForest::markers() const {
  std::vector<Marker> out;
  out.reserve(order_.size());
  for (OrderList::Handle h = order_.first(); h != OrderList::kNone; h = order_.next(h)) {
    out.push_back(owners_[h]);
  }
  return out;
}

}  // namespace sst
