#include "sst/query.hpp"

#include <algorithm>

namespace sst {

namespace {

void bump(QueryCounters* c, std::uint64_t QueryCounters::*field, std::uint64_t by = 1) {
  if (c) c->*field += by;
}

// Start of an in-window occurrence of v's spelled string.
StreamPos witness(const IndexView& ix, NodeId v) {
  const Node* nd = &ix.tree.node(v);
  if (nd->is_leaf()) return nd->suffix_start;
  if (nd->rep_pos >= ix.window.start()) return nd->rep_pos;
  while (!nd->is_leaf()) nd = &ix.tree.node(nd->children.entries().front().child);
  return nd->suffix_start;
}

}  // namespace

std::vector<StreamPos> linear_match(const WindowBuffer& w, StreamPos from, StreamPos to,
                                    std::string_view q, QueryCounters* counters) {
  std::vector<StreamPos> hits;
  const std::size_t m = q.size();
  if (m == 0 || to < from || to - from < m) return hits;

  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && q[i] != q[k]) k = fail[k - 1];
    if (q[i] == q[k]) ++k;
    fail[i] = k;
  }
  std::size_t k = 0;
  for (StreamPos p = from; p < to; ++p) {
    const char c = static_cast<char>(w.char_at(p));
    bump(counters, &QueryCounters::scan_chars);
    while (k > 0 && c != q[k]) k = fail[k - 1];
    if (c == q[k]) ++k;
    if (k == m) {
      hits.push_back(p + 1 - m);
      k = fail[k - 1];
    }
  }
  return hits;
}

std::optional<Locus> locate_locus(const IndexView& ix, std::string_view q,
                                  QueryCounters* counters) {
  if (q.empty()) return std::nullopt;
  const StreamPos m = q.size();
  const StreamPos n = ix.window.n();
  NodeId cur = ix.tree.root();
  StreamPos depth = 0;
  for (;;) {
    const NodeId next = ix.tree.child(cur, static_cast<unsigned char>(q[depth]));
    bump(counters, &QueryCounters::visited_nodes);
    if (!next) return std::nullopt;
    const StreamPos next_depth = ix.tree.string_depth(next, n);
    if (next_depth >= m) return Locus{next, m};
    if (ix.tree.node(next).is_leaf()) return std::nullopt;
    cur = next;
    depth = next_depth;
  }
}

bool verify_locus(const IndexView& ix, const Locus& locus, std::string_view q,
                  QueryCounters* counters) {
  bump(counters, &QueryCounters::scan_chars, q.size());
  return ix.window.substring_equals(witness(ix, locus.node), q);
}

SubtreeScan collect_subtree(const IndexView& ix, const Locus& locus, QueryCounters* counters) {
  SubtreeScan out;
  std::vector<NodeId> stack{locus.node};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    bump(counters, &QueryCounters::visited_nodes);
    const Node& nd = ix.tree.node(v);
    if (nd.is_leaf()) {
      out.leaves.push_back(nd.suffix_start);
      continue;
    }
    out.internals.push_back(v);
    for (const auto& e : nd.children.entries()) stack.push_back(e.child);
  }
  return out;
}

std::vector<StreamPos> collect_finalized(const IndexView& ix, const Locus& locus) {
  return collect_subtree(ix, locus).leaves;
}

std::vector<StreamPos> buffer_occurrences(const IndexView& ix, const Locus& locus,
                                          std::string_view q, const SubtreeScan& scan,
                                          QueryCounters* counters, BufferCase* which) {
  std::vector<StreamPos> out;
  const StreamPos b = ix.active.buffer_len;
  const StreamPos m = q.size();
  const StreamPos n = ix.window.n();
  const StreamPos buffer_start = n - b;
  auto report = [&](BufferCase bc) {
    if (which) *which = bc;
  };

  if (b < m) {
    report(BufferCase::kShorter);
    return out;
  }
  if (b == m) {
    report(BufferCase::kEqual);
    if (ix.active.node == locus.node) out.push_back(buffer_start);
    return out;
  }

  const Node& beta = ix.tree.node(ix.active.node);
  if (!beta.is_leaf()) {
    report(BufferCase::kLinkAncestry);
    for (NodeId alpha : scan.internals) {
      bump(counters, &QueryCounters::link_checks);
      if (!ix.ancestry.is_ancestor(alpha, ix.active.node)) continue;
      const StreamPos i = ix.ancestry.link_distance(alpha, ix.active.node);
      if (i + m <= b) out.push_back(buffer_start + i);
    }
    return out;
  }

  const StreamPos x = beta.suffix_start;
  const StreamPos p = buffer_start - x;
  if (p <= m) {
    report(BufferCase::kPeriodicScan);
    // Every occurrence inside B is congruent mod p to one starting below p.
    const StreamPos scan_len = std::min(b, p + m - 1);
    for (StreamPos hit : linear_match(ix.window, buffer_start, buffer_start + scan_len, q, counters)) {
      for (StreamPos off = hit - buffer_start; off + m <= b; off += p) out.push_back(buffer_start + off);
    }
  } else {
    report(BufferCase::kPeriodicLeaves);
    for (StreamPos z : scan.leaves) {
      if (z < x || z >= buffer_start) continue;
      for (StreamPos s = z + p; s + m <= n; s += p) out.push_back(s);
    }
  }
  return out;
}

QueryResult find(const IndexView& ix, std::string_view q) {
  if (q.empty()) throw std::invalid_argument("query must be non-empty");
  QueryResult result;
  const auto locus = locate_locus(ix, q, &result.counters);
  if (!locus || !verify_locus(ix, *locus, q, &result.counters)) return result;

  const SubtreeScan scan = collect_subtree(ix, *locus, &result.counters);
  std::vector<StreamPos> buffered =
      buffer_occurrences(ix, *locus, q, scan, &result.counters, &result.buffer_case);

  result.positions = scan.leaves;
  std::sort(result.positions.begin(), result.positions.end());
  std::sort(buffered.begin(), buffered.end());
  result.buffer_hits = buffered.size();
  result.positions.insert(result.positions.end(), buffered.begin(), buffered.end());
  return result;
}

std::optional<PeriodInfo> period_info(const IndexView& ix) {
  if (ix.active.buffer_len == 0) return std::nullopt;
  const Node& beta = ix.tree.node(ix.active.node);
  if (!beta.is_leaf()) return std::nullopt;
  const StreamPos x = beta.suffix_start;
  return PeriodInfo{x, ix.window.n() - ix.active.buffer_len - x};
}

}  // namespace sst
