#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "sst/sliding_suffix_tree.hpp"

namespace sst {

// Decodes a byte literal: `\xHH` for any byte, `\\` for a backslash.
// Throws std::invalid_argument on a malformed escape.
std::string decode_bytes(std::string_view literal);
std::string escape_bytes(std::string_view bytes);

struct ScriptOptions {
  bool relative = false;  // report window offsets instead of stream positions
  bool paranoid = false;  // audit after every shift
};

// Line protocol:
//   window <N>      start a fresh index of capacity N
//   feed <bytes>    shift each byte in
//   find <bytes>    -> "<count> <pos...>"
//   stats           -> "n=.. start=.. fill=.. b=.. leaves=.. internal=.."
//   audit           -> "OK" or one "VIOLATION <text>" line each
//   quit
// Malformed input yields one "ERR <reason>" line; processing continues.
class ScriptSession {
 public:
  explicit ScriptSession(ScriptOptions options = {}) : options_(options) {}

  // Returns false once `quit` has been read.
  bool execute(std::string_view line, std::ostream& out);

  // No ERR and no violation emitted so far.
  bool clean() const { return clean_; }
  const SlidingSuffixTree* index() const { return index_.get(); }

 private:
  void error(std::ostream& out, std::string_view reason);
  void report_violations(std::ostream& out, bool ok_line);

  ScriptOptions options_;
  std::unique_ptr<SlidingSuffixTree> index_;
  bool clean_ = true;
};

// Runs a whole script; returns true iff the run was clean.
bool run_script(std::istream& in, std::ostream& out, ScriptOptions options = {});

struct BenchConfig {
  std::string corpus_path;
  std::string queries_path;
  std::size_t window = 0;
  std::optional<std::string> csv_path;
  std::size_t checkpoints = 8;
};

// Feeds the corpus, then at evenly spaced checkpoints answers every query
// with the index, a full-window linear rescan, and a rebuild from scratch.
// Throws std::runtime_error on I/O failure.
void run_bench(const BenchConfig& config, std::ostream& out);

}  // namespace sst
