#include "sst/window_store.hpp"

#include <sstream>

namespace sst {

void invariant_failure(const char* expr, const char* file, int line,
                       const std::string& detail) {
  std::ostringstream os;
  os << "invariant violated: " << expr << " at " << file << ":" << line;
  if (!detail.empty()) os << " (" << detail << ")";
  throw InvariantError(os.str());
}

WindowBuffer::WindowBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("window capacity must be >= 1");
  cells_.resize(capacity + 1);
}

StreamPos WindowBuffer::push(unsigned char c) {
  SST_ENSURE(n_ - start_ < cells_.size(), "push would overwrite an unevicted cell");
  cells_[slot(n_)] = c;
  return n_++;
}

StreamPos WindowBuffer::advance_start() {
  SST_ENSURE(n_ > start_, "advance_start on an empty window");
  return ++start_;
}

unsigned char WindowBuffer::char_at(StreamPos p) const {
  SST_ENSURE(p >= start_ && p < n_, "position " + std::to_string(p) + " outside [" +
                                        std::to_string(start_) + ", " + std::to_string(n_) + ")");
  return cells_[slot(p)];
}

bool WindowBuffer::substring_equals(StreamPos p, std::string_view s) const {
  SST_ENSURE(p >= start_ && p + s.size() <= n_, "range escapes the window");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (cells_[slot(p + i)] != static_cast<unsigned char>(s[i])) return false;
  }
  return true;
}

std::string WindowBuffer::extract(StreamPos from, StreamPos to) const {
  SST_ENSURE(from >= start_ && from <= to && to <= n_, "extract range escapes the window");
  std::string out;
  out.reserve(static_cast<std::size_t>(to - from));
  for (StreamPos p = from; p < to; ++p) out.push_back(static_cast<char>(cells_[slot(p)]));
  return out;
}

}  // namespace sst
