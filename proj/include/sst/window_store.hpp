#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sst/common.hpp"

namespace sst {

// Ring buffer over the live window. Holds capacity + 1 cells so that a shift
// can append before it evicts. Every character comparison in the index goes
// through here.
class WindowBuffer {
 public:
  explicit WindowBuffer(std::size_t capacity);

  StreamPos push(unsigned char c);
  StreamPos advance_start();

  unsigned char char_at(StreamPos p) const;
  bool substring_equals(StreamPos p, std::string_view s) const;

  // Copy of [from, to) as a byte string; both ends must lie in [start, n].
  std::string extract(StreamPos from, StreamPos to) const;
  std::string content() const { return extract(start_, n_); }

  std::size_t capacity() const { return capacity_; }
  StreamPos n() const { return n_; }
  StreamPos start() const { return start_; }
  std::size_t size() const { return static_cast<std::size_t>(n_ - start_); }

 private:
  std::size_t slot(StreamPos p) const { return static_cast<std::size_t>(p % cells_.size()); }

  std::size_t capacity_;
  std::vector<unsigned char> cells_;
  StreamPos n_ = 0;
  StreamPos start_ = 0;
};

}  // namespace sst
