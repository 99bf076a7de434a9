#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sst/common.hpp"
#include "sst/order_list.hpp"

namespace sst {

// The suffix-links tree over the branching nodes of the suffix tree. Each
// member holds an opening and a closing marker in an order-maintenance list;
// a's markers enclose b's iff a is an ancestor of b. Link depth counts
// suffix-link hops to the root.
class AncestryForest {
 public:
  struct Marker {
    NodeId node;
    bool opening;
  };

  struct Counters {
    std::uint64_t attached = 0;
    std::uint64_t removed = 0;
    std::uint64_t marker_ops = 0;
  };

  explicit AncestryForest(NodeId root);

  // chain is in creation order: chain[k] links to chain[k+1], the last
  // element links to parent. Insertion runs top-down.
  void attach_chain(NodeId parent, std::span<const NodeId> chain);

  // Only ever legal on a member with no link-children.
  void remove_leaf(NodeId v);

  bool contains(NodeId v) const;
  bool is_ancestor(NodeId a, NodeId b) const;
  std::uint64_t link_distance(NodeId a, NodeId b) const;

  std::uint64_t link_depth(NodeId v) const;
  NodeId link_parent(NodeId v) const;
  std::uint32_t link_children(NodeId v) const;
  NodeId root() const { return root_; }
  std::size_t size() const { return members_; }

  // Markers in list order, for audits.
  std::vector<Marker> markers() const;

  const Counters& counters() const { return counters_; }
  const OrderList::Counters& order_counters() const { return order_.counters(); }

 private:
  struct Entry {
    bool present = false;
    OrderList::Handle open = OrderList::kNone;
    OrderList::Handle close = OrderList::kNone;
    std::uint64_t depth = 0;
    NodeId parent;
    std::uint32_t children = 0;
  };

  const Entry& entry(NodeId v) const;
  Entry& slot(NodeId v);
  void own(OrderList::Handle h, NodeId v, bool opening);

  NodeId root_;
  OrderList order_;
  std::vector<Entry> entries_;
  std::vector<Marker> owners_;  // indexed by order-list handle
  std::size_t members_ = 0;
  Counters counters_;
};

}  // namespace sst
