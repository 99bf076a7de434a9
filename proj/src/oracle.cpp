#include "sst/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sst::oracle {

std::vector<std::size_t> naive_find(std::string_view text, std::string_view q) {
  std::vector<std::size_t> out;
  if (q.empty() || q.size() > text.size()) return out;
  for (std::size_t s = 0; s + q.size() <= text.size(); ++s) {
    bool match = true;
    for (std::size_t j = 0; j < q.size() && match; ++j) match = text[s + j] == q[j];
    if (match) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> searcher_find(std::string_view text, std::string_view q) {
  std::vector<std::size_t> out;
  if (q.empty()) return out;
  const std::boyer_moore_searcher searcher(q.begin(), q.end());
  auto it = text.begin();
  for (;;) {
    auto [first, last] = searcher(it, text.end());
    if (first == text.end()) break;
    out.push_back(static_cast<std::size_t>(first - text.begin()));
    it = first + 1;
  }
  return out;
}

std::size_t naive_longest_repeated_suffix(std::string_view text) {
  const std::size_t n = text.size();
  for (std::size_t b = n == 0 ? 0 : n - 1; b > 0; --b) {
    const std::string_view suffix = text.substr(n - b);
    // Some occurrence must start strictly before n - b.
    if (text.find(suffix) < n - b) return b;
  }
  return 0;
}

namespace {

std::string hex(unsigned char c) {
  char buf[3];
  std::snprintf(buf, sizeof buf, "%02x", c);
  return buf;
}

void encode_naive(std::string_view text, std::vector<std::size_t> group, std::size_t depth,
                  StreamPos base, std::string& out) {
  out += "I" + std::to_string(depth) + "{";
  // Bucket by the character at `depth`. Finalized suffixes are never a
  // prefix of another suffix, so every member extends past depth.
  std::vector<std::vector<std::size_t>> by_char(256);
  for (std::size_t s : group) {
    if (s + depth >= text.size()) {
      out += "!";  // malformed: a finalized suffix ends at a branching point
      continue;
    }
    by_char[static_cast<unsigned char>(text[s + depth])].push_back(s);
  }
  bool first = true;
  for (int c = 0; c < 256; ++c) {
    auto& members = by_char[c];
    if (members.empty()) continue;
    if (!first) out += ",";
    first = false;
    out += hex(static_cast<unsigned char>(c)) + ":";
    if (members.size() == 1) {
      out += "L" + std::to_string(base + members.front());
      continue;
    }
    std::size_t lcp = depth + 1;
    for (;;) {
      bool all = true;
      const std::size_t s0 = members.front();
      if (s0 + lcp >= text.size()) break;
      for (std::size_t s : members) {
        if (s + lcp >= text.size() || text[s + lcp] != text[s0 + lcp]) {
          all = false;
          break;
        }
      }
      if (!all) break;
      ++lcp;
    }
    encode_naive(text, members, lcp, base, out);
  }
  out += "}";
}

void encode_live(const SuffixTree& tree, NodeId v, std::string& out) {
  const Node& nd = tree.node(v);
  if (nd.is_leaf()) {
    out += "L" + std::to_string(nd.suffix_start);
    return;
  }
  out += "I" + std::to_string(nd.depth) + "{";
  std::vector<ChildTable::Entry> kids(nd.children.entries().begin(), nd.children.entries().end());
  std::sort(kids.begin(), kids.end(), [](auto a, auto b) { return a.key < b.key; });
  bool first = true;
  for (const auto& e : kids) {
    if (!first) out += ",";
    first = false;
    out += hex(e.key) + ":";
    encode_live(tree, e.child, out);
  }
  out += "}";
}

}  // namespace

std::string naive_suffix_tree(std::string_view text, std::size_t implicit_count, StreamPos base) {
  std::vector<std::size_t> finalized;
  for (std::size_t s = 0; s + implicit_count < text.size(); ++s) finalized.push_back(s);
  std::string out;
  encode_naive(text, finalized, 0, base, out);
  return out;
}

std::string encode_tree(const SlidingSuffixTree& index) {
  std::string out;
  encode_live(index.tree(), index.tree().root(), out);
  return out;
}

bool pumping_holds(const SlidingSuffixTree& index) {
  const auto period = period_info(index.view());
  if (!period) return true;
  const WindowBuffer& w = index.window();
  if (period->p == 0 || period->x < w.start()) return false;
  for (StreamPos j = period->x; j + period->p < w.n(); ++j) {
    if (w.char_at(j) != w.char_at(j + period->p)) return false;
  }
  return true;
}

namespace {

class Auditor {
 public:
  Auditor(const SlidingSuffixTree& index, AuditOptions options)
      : ix_(index), tree_(index.tree()), w_(index.window()), options_(options) {}

  std::vector<std::string> run() {
    walk();
    check_queue();
    check_markers();
    check_active_point();
    check_against_oracle();
    return std::move(violations_);
  }

 private:
  template <typename... Parts>
  void fail(Parts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    violations_.push_back(os.str());
  }

  std::string describe(NodeId v) const {
    const Node& nd = tree_.node(v);
    std::ostringstream os;
    os << "node#" << v.index();
    if (nd.is_leaf()) os << "(leaf " << nd.suffix_start << ")";
    else if (nd.is_root()) os << "(root)";
    else os << "(depth " << nd.depth << ")";
    return os.str();
  }

  // Descendant leaf position: a trustworthy occurrence of v's string.
  StreamPos leaf_witness(NodeId v) const {
    const Node* nd = &tree_.node(v);
    while (!nd->is_leaf()) nd = &tree_.node(nd->children.entries().front().child);
    return nd->suffix_start;
  }

  bool spans_window(StreamPos p, StreamPos len) const {
    return p >= w_.start() && p + len <= w_.n();
  }

  void walk() {
    const StreamPos n = w_.n();
    std::vector<NodeId> stack{tree_.root()};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      const Node& nd = tree_.node(v);
      if (nd.is_leaf()) {
        ++leaves_;
        check_leaf(v, nd, n);
        continue;
      }
      if (nd.is_internal()) {
        ++internals_;
        check_internal(v, nd, n);
      } else if (!nd.is_root()) {
        fail(describe(v), ": freed node reachable from the root");
        continue;
      }
      for (const auto& e : nd.children.entries()) {
        const Node& ch = tree_.node(e.child);
        if (ch.first_char != e.key) {
          fail(describe(e.child), ": child key ", int(e.key), " != first_char ", int(ch.first_char));
        }
        if (ch.parent != v) fail(describe(e.child), ": parent pointer mismatch");
        const StreamPos child_depth = tree_.string_depth(e.child, n);
        if (child_depth <= nd.depth) {
          fail(describe(e.child), ": depth ", child_depth, " not below parent depth ", nd.depth);
          continue;
        }
        // The edge's first character as actually spelled by the text.
        const StreamPos wp = leaf_witness(e.child);
        if (spans_window(wp, nd.depth + 1) && w_.char_at(wp + nd.depth) != ch.first_char) {
          fail(describe(e.child), ": first_char disagrees with the text");
        }
        stack.push_back(e.child);
      }
    }
    if (leaves_ != tree_.leaf_count()) fail("leaf count ", leaves_, " != tracked ", tree_.leaf_count());
    if (internals_ != tree_.internal_count()) {
      fail("internal count ", internals_, " != tracked ", tree_.internal_count());
    }
    if (ix_.ancestry().size() != internals_ + 1) {
      fail("suffix-links tree has ", ix_.ancestry().size(), " members, expected ", internals_ + 1);
    }
  }

  void check_leaf(NodeId v, const Node& nd, StreamPos n) {
    if (nd.suffix_start < w_.start() || nd.suffix_start >= n) {
      fail(describe(v), ": suffix_start outside the window");
    }
    if (!leaf_starts_.insert(nd.suffix_start).second) fail(describe(v), ": duplicate suffix_start");
  }

  void check_internal(NodeId v, const Node& nd, StreamPos n) {
    if (nd.children.size() < 2) fail(describe(v), ": branching node with ", nd.children.size(), " children");
    const StreamPos leaf = leaf_witness(v);
    if (nd.rep_pos < w_.start() || nd.rep_pos + nd.depth > n) {
      fail(describe(v), ": rep_pos ", nd.rep_pos, " is stale (window [", w_.start(), ", ", n, "))");
    } else if (w_.extract(nd.rep_pos, nd.rep_pos + nd.depth) != w_.extract(leaf, leaf + nd.depth)) {
      fail(describe(v), ": rep_pos does not spell the node's string");
    }

    const NodeId link = nd.suffix_link;
    if (!link.valid() || link.index() >= tree_.arena_size()) {
      fail(describe(v), ": missing suffix link");
      return;
    }
    const Node& ln = tree_.node(link);
    if (ln.is_leaf() || ln.kind == NodeKind::kFree) {
      fail(describe(v), ": suffix link to a non-branching node");
      return;
    }
    if (ln.depth + 1 != nd.depth) {
      fail(describe(v), ": suffix link depth ", ln.depth, " != ", nd.depth - 1);
    } else if (!ln.is_root()) {
      const StreamPos lw = leaf_witness(link);
      if (w_.extract(leaf + 1, leaf + nd.depth) != w_.extract(lw, lw + ln.depth)) {
        fail(describe(v), ": suffix link target spells a different string");
      }
    }

    const AncestryForest& an = ix_.ancestry();
    if (!an.contains(v)) {
      fail(describe(v), ": not in the suffix-links tree");
    } else if (an.link_parent(v) != link) {
      fail(describe(v), ": suffix-links tree parent disagrees with suffix link");
    } else if (an.contains(link) && an.link_depth(v) != an.link_depth(link) + 1) {
      fail(describe(v), ": link depth inconsistent");
    }
  }

  void check_queue() {
    std::size_t count = 0;
    bool first = true;
    StreamPos prev = 0;
    for (NodeId v = tree_.queue_head(); v.valid(); v = tree_.node(v).queue_next) {
      const Node& nd = tree_.node(v);
      if (!nd.is_leaf()) {
        fail("leaf queue holds a non-leaf ", describe(v));
        return;
      }
      if (!first && nd.suffix_start <= prev) fail("leaf queue out of order at ", describe(v));
      if (first && w_.size() > 0 && nd.suffix_start != w_.start()) {
        fail("leaf queue head ", nd.suffix_start, " != window start ", w_.start());
      }
      prev = nd.suffix_start;
      first = false;
      if (++count > tree_.leaf_count()) {
        fail("leaf queue longer than the leaf count");
        return;
      }
    }
    if (count != leaves_) fail("leaf queue has ", count, " entries, tree has ", leaves_, " leaves");
  }

  void check_markers() {
    const AncestryForest& an = ix_.ancestry();
    std::vector<NodeId> stack;
    for (const auto& m : an.markers()) {
      if (m.opening) {
        if (stack.empty() ? m.node != an.root() : an.link_parent(m.node) != stack.back()) {
          fail("marker nesting: ", describe(m.node), " opens outside its link parent");
        }
        stack.push_back(m.node);
      } else {
        if (stack.empty() || stack.back() != m.node) {
          fail("marker nesting: unbalanced close for ", describe(m.node));
          return;
        }
        stack.pop_back();
      }
    }
    if (!stack.empty()) fail("marker nesting: unclosed markers");
  }

  void check_active_point() {
    const ActivePoint& ap = ix_.active();
    const StreamPos b = ap.buffer_len;
    if (b == 0) {
      if (ap.node != tree_.root()) fail("active point: empty buffer off the root");
      return;
    }
    if (b >= w_.size()) fail("active point: buffer ", b, " is not a proper suffix of the window");
    const Node& beta = tree_.node(ap.node);
    if (beta.is_root() || beta.kind == NodeKind::kFree) {
      fail("active point: non-empty buffer on root or freed node");
      return;
    }
    const StreamPos upper = tree_.node(beta.parent).depth;
    const StreamPos lower = tree_.string_depth(ap.node, w_.n());
    if (!(upper < b && b <= lower)) {
      fail("active point: buffer ", b, " outside edge (", upper, ", ", lower, "]");
      return;
    }
    const StreamPos wp = leaf_witness(ap.node);
    if (w_.extract(wp, wp + b) != w_.extract(w_.n() - b, w_.n())) {
      fail("active point: B is not a prefix of the active node's string");
    }
    if (!pumping_holds(ix_)) fail("active point: leaf-buffer periodicity broken");
  }

  void check_against_oracle() {
    const std::string text = w_.content();
    const std::size_t b = naive_longest_repeated_suffix(text);
    if (b != ix_.active().buffer_len) {
      fail("buffer length ", ix_.active().buffer_len, " != longest repeated suffix ", b);
    }
    if (leaves_ + ix_.active().buffer_len != text.size()) {
      fail("leaf count ", leaves_, " + |B| != window length ", text.size());
    }
    if (options_.isomorphism) {
      const std::string expected = naive_suffix_tree(text, b, w_.start());
      const std::string actual = encode_tree(ix_);
      if (expected != actual) fail("tree differs from the naive suffix tree: ", actual, " vs ", expected);
    }
  }

  const SlidingSuffixTree& ix_;
  const SuffixTree& tree_;
  const WindowBuffer& w_;
  AuditOptions options_;
  std::vector<std::string> violations_;
  std::unordered_set<StreamPos> leaf_starts_;
  std::size_t leaves_ = 0;
  std::size_t internals_ = 0;
};

}  // namespace

std::vector<std::string> audit(const SlidingSuffixTree& index, AuditOptions options) {
  return Auditor(index, options).run();
}

}  // namespace sst::oracle
