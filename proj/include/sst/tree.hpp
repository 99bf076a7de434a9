#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sst/common.hpp"
#include "sst/window_store.hpp"

namespace sst {

// Children of a branching node keyed by the first character of the edge.
// Small tables scan a flat vector; past kDirectThreshold entries a 256-slot
// index keeps lookup O(1) for the byte alphabet.
class ChildTable {
 public:
  struct Entry {
    unsigned char key;
    NodeId child;
  };

  ChildTable() = default;
  ChildTable(ChildTable&&) noexcept = default;
  ChildTable& operator=(ChildTable&&) noexcept = default;

  NodeId find(unsigned char c) const;
  void insert(unsigned char c, NodeId child);
  void replace(unsigned char c, NodeId child);
  void erase(unsigned char c);
  void clear();

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }

 private:
  static constexpr std::size_t kDirectThreshold = 8;
  static constexpr std::uint16_t kNoSlot = 0xFFFF;

  std::size_t locate(unsigned char c) const;
  void build_index();

  std::vector<Entry> entries_;
  std::unique_ptr<std::array<std::uint16_t, 256>> index_;
};

enum class NodeKind : std::uint8_t { kRoot, kInternal, kLeaf, kFree };

struct Node {
  NodeKind kind = NodeKind::kFree;
  unsigned char first_char = 0;  // undefined for the root
  bool credit = false;           // internal only
  NodeId parent;
  NodeId suffix_link;            // internal only; root links to itself
  StreamPos depth = 0;           // string depth, internal/root only
  StreamPos suffix_start = 0;    // leaf only
  StreamPos rep_pos = 0;         // internal only: start of an in-window occurrence
  NodeId queue_prev;             // leaf only
  NodeId queue_next;
  ChildTable children;

  bool is_leaf() const { return kind == NodeKind::kLeaf; }
  bool is_root() const { return kind == NodeKind::kRoot; }
  bool is_internal() const { return kind == NodeKind::kInternal; }
};

struct TreeCounters {
  std::uint64_t nodes_created = 0;
  std::uint64_t nodes_deleted = 0;
  std::uint64_t credit_steps = 0;
  std::uint64_t rep_fallbacks = 0;
};

// Arena of PATRICIA suffix-tree nodes. Edges carry only a first character;
// string depths are stored absolutely on branching nodes, and mid-edge
// characters are read from a leaf's suffix position or a branching node's
// representative occurrence.
class SuffixTree {
 public:
  SuffixTree();

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const;

  NodeId child(NodeId v, unsigned char c) const;

  // Leaves are open-ended: their string depth is n - suffix_start.
  StreamPos string_depth(NodeId v, StreamPos n) const;

  NodeId insert_leaf(NodeId parent, StreamPos suffix_start, const WindowBuffer& w);
  NodeId split_edge(NodeId v, StreamPos split_depth, StreamPos occurrence,
                    const WindowBuffer& w);
  NodeId merge_unary(NodeId pi);
  void remove_leaf(NodeId leaf);
  void relabel_leaf(NodeId leaf, StreamPos new_start);
  void set_suffix_link(NodeId v, NodeId target);

  void deposit_credit(NodeId v, StreamPos fresh);
  unsigned char edge_char(NodeId v, StreamPos string_offset, const WindowBuffer& w);

  NodeId queue_head() const { return queue_head_; }
  NodeId queue_tail() const { return queue_tail_; }

  std::size_t leaf_count() const { return leaves_; }
  std::size_t internal_count() const { return internals_; }
  std::size_t arena_size() const { return nodes_.size(); }

  const TreeCounters& counters() const { return counters_; }

  // Fault injection for audit tests.
  void corrupt_first_char_for_testing(NodeId v, unsigned char c);

 private:
  Node& at(NodeId id);
  NodeId allocate(NodeKind kind);
  void release(NodeId id);
  void queue_append(NodeId leaf);
  void queue_unlink(NodeId leaf);
  NodeId descend_to_leaf(NodeId v) const;

  std::vector<Node> nodes_;
  std::vector<NodeId> free_;
  NodeId root_;
  NodeId queue_head_;
  NodeId queue_tail_;
  std::size_t leaves_ = 0;
  std::size_t internals_ = 0;
  TreeCounters counters_;
};

}  // namespace sst
