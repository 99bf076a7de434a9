#include "sst/builder.hpp"

namespace sst {

ActivePoint Builder::rescan(const SuffixTree& tree, const WindowBuffer& w, NodeId from,
                            StreamPos lo, StreamPos hi) {
  SST_ENSURE(!tree.node(from).is_leaf(), "rescan starts at a branching node");
  const StreamPos base = tree.node(from).depth;
  const StreamPos target = base + (hi - lo);
  NodeId cur = from;
  StreamPos depth = base;
  while (depth < target) {
    const NodeId next = tree.child(cur, w.char_at(lo + (depth - base)));
    SST_ENSURE(next.valid(), "rescan path missing from the tree");
    ++counters_.rescan_hops;
    const StreamPos next_depth = tree.string_depth(next, w.n());
    if (next_depth >= target) return {next, target};
    cur = next;
    depth = next_depth;
  }
  return {cur, target};
}

ChainBuffer Builder::add_char(SuffixTree& tree, const WindowBuffer& w) {
  const StreamPos pos = w.n() - 1;
  const unsigned char c = w.char_at(pos);
  ChainBuffer chain;
  NodeId pending;  // newest split node, suffix link unresolved

  for (;;) {
    const NodeId beta = active_.node;
    const StreamPos b = active_.buffer_len;
    const Node& bn = tree.node(beta);
    const bool at_node = b == 0 || (!bn.is_leaf() && b == bn.depth);

    if (at_node) {
      if (pending) {
        tree.set_suffix_link(pending, beta);
        chain.attach_target = beta;
        pending = NodeId::none();
      }
      const NodeId next = tree.child(beta, c);
      if (next) {
        ++counters_.buffering_steps;
        active_ = {next, b + 1};
        return chain;
      }
      ++counters_.expanding_steps;
      tree.insert_leaf(beta, pos - b, w);
      if (b == 0) return chain;
      active_ = {tree.node(beta).suffix_link, b - 1};
      continue;
    }

    if (tree.edge_char(beta, b, w) == c) {
      SST_ENSURE(!pending, "fresh split node left without a suffix link");
      ++counters_.buffering_steps;
      active_.buffer_len = b + 1;
      return chain;
    }

    ++counters_.expanding_steps;
    SST_ENSURE(!chain.attach_target.valid(), "split after the chain was already attached");
    const NodeId gamma = tree.split_edge(beta, b, pos - b, w);
    if (pending) tree.set_suffix_link(pending, gamma);
    chain.nodes.push_back(gamma);
    pending = gamma;
    tree.insert_leaf(gamma, pos - b, w);

    const NodeId alpha = tree.node(gamma).parent;
    if (tree.node(alpha).is_root()) {
      active_ = rescan(tree, w, alpha, pos - b + 1, pos);
    } else {
      active_ = rescan(tree, w, tree.node(alpha).suffix_link, pos - b + tree.node(alpha).depth, pos);
    }
  }
}

}  // namespace sst
