#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sst/common.hpp"
#include "sst/sliding_suffix_tree.hpp"

namespace sst::oracle {

// Brute-force references. They work on plain window content, never on the
// index, so they stay independent of the code they check.

std::vector<std::size_t> naive_find(std::string_view text, std::string_view q);

// Second matcher built on std::boyer_moore_searcher, used to cross-check
// naive_find.
std::vector<std::size_t> searcher_find(std::string_view text, std::string_view q);

// Longest suffix of text that also starts somewhere earlier; 0 if none.
std::size_t naive_longest_repeated_suffix(std::string_view text);

// Canonical encoding of the compacted trie over the suffixes of text that
// start before |text| - implicit_count. Leaf labels are base + offset.
// Grammar: leaf "L<pos>"; branching node "I<depth>{<hex>:<child>,...}" with
// children in ascending key order.
std::string naive_suffix_tree(std::string_view text, std::size_t implicit_count,
                              StreamPos base = 0);

// Same encoding produced from the live index.
std::string encode_tree(const SlidingSuffixTree& index);

struct AuditOptions {
  bool isomorphism = true;  // O(w^2): disable for large windows
};

// Every structural invariant of the index. Empty result means pass.
std::vector<std::string> audit(const SlidingSuffixTree& index, AuditOptions options = {});

// p-periodicity of [x, n) when the active node is a leaf; true otherwise.
bool pumping_holds(const SlidingSuffixTree& index);

}  // namespace sst::oracle
