#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sst/oracle.hpp"
#include "sst/sliding_suffix_tree.hpp"

namespace sst::testing {

inline SlidingSuffixTree build(std::size_t capacity, std::string_view text) {
  SlidingSuffixTree ix(capacity);
  ix.feed(text);
  return ix;
}

// Node reached by navigating s; must exist.
inline NodeId node_for(const SlidingSuffixTree& ix, std::string_view s) {
  if (s.empty()) return ix.tree().root();
  auto locus = locate_locus(ix.view(), s);
  return locus ? locus->node : NodeId::none();
}

inline std::vector<StreamPos> sorted(std::vector<StreamPos> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<StreamPos> brute(const SlidingSuffixTree& ix, std::string_view q) {
  std::vector<StreamPos> out;
  for (std::size_t s : oracle::naive_find(ix.window().content(), q)) out.push_back(s + ix.window().start());
  return out;
}

}  // namespace sst::testing
