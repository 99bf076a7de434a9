#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sst/ancestry.hpp"
#include "sst/builder.hpp"
#include "sst/common.hpp"
#include "sst/tree.hpp"
#include "sst/window_store.hpp"

namespace sst {

// Read-only view of a consistent index state (between shifts).
struct IndexView {
  const WindowBuffer& window;
  const SuffixTree& tree;
  const AncestryForest& ancestry;
  ActivePoint active;
};

// Where navigating Q ended: `node` is the node reached, or the lower end of
// the edge when Q stops mid-edge.
struct Locus {
  NodeId node;
  StreamPos match_depth = 0;
};

// When β is a leaf storing x, the stream is p-periodic on [x, n) with
// p = (n - |B|) - x.
struct PeriodInfo {
  StreamPos x = 0;
  StreamPos p = 0;
};

struct QueryCounters {
  std::uint64_t visited_nodes = 0;
  std::uint64_t link_checks = 0;
  std::uint64_t scan_chars = 0;

  std::uint64_t total() const { return visited_nodes + link_checks + scan_chars; }
};

// Which buffer case served the query; useful to tests and the bench.
enum class BufferCase : std::uint8_t {
  kNone,           // locus absent or unverified
  kShorter,        // |B| < |Q|
  kEqual,          // |B| == |Q|
  kLinkAncestry,   // |B| > |Q|, β branching
  kPeriodicScan,   // |B| > |Q|, β leaf, p <= |Q|
  kPeriodicLeaves  // |B| > |Q|, β leaf, p > |Q|
};

struct QueryResult {
  std::vector<StreamPos> positions;  // ascending, absolute
  QueryCounters counters;
  BufferCase buffer_case = BufferCase::kNone;
  std::size_t buffer_hits = 0;  // how many positions came from the buffer
};

// Leaves and branching nodes of the subtree below a locus.
struct SubtreeScan {
  std::vector<StreamPos> leaves;
  std::vector<NodeId> internals;
};

QueryResult find(const IndexView& ix, std::string_view q);

// Blind descent: first characters and depths only. A returned locus is a
// candidate; verify_locus must confirm it.
std::optional<Locus> locate_locus(const IndexView& ix, std::string_view q,
                                  QueryCounters* counters = nullptr);
bool verify_locus(const IndexView& ix, const Locus& locus, std::string_view q,
                  QueryCounters* counters = nullptr);

SubtreeScan collect_subtree(const IndexView& ix, const Locus& locus,
                            QueryCounters* counters = nullptr);
std::vector<StreamPos> collect_finalized(const IndexView& ix, const Locus& locus);

std::vector<StreamPos> buffer_occurrences(const IndexView& ix, const Locus& locus,
                                          std::string_view q, const SubtreeScan& scan,
                                          QueryCounters* counters = nullptr,
                                          BufferCase* which = nullptr);

std::optional<PeriodInfo> period_info(const IndexView& ix);

// Knuth-Morris-Pratt over a window range; returns absolute match starts.
std::vector<StreamPos> linear_match(const WindowBuffer& w, StreamPos from, StreamPos to,
                                    std::string_view q, QueryCounters* counters = nullptr);

}  // namespace sst
