#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace sst {

// Absolute 0-based index into the stream. Never renumbered on shift.
using StreamPos = std::uint64_t;

// Thrown when an internal invariant is breached. These are logic faults,
// never expected in correct operation; tests use them to observe traps.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void invariant_failure(const char* expr, const char* file, int line,
                                    const std::string& detail);

#define SST_ENSURE(cond, detail)                                         \
  do {                                                                   \
    if (!(cond)) ::sst::invariant_failure(#cond, __FILE__, __LINE__, detail); \
  } while (0)

// Handle into the node arena.
class NodeId {
 public:
  using underlying = std::uint32_t;
  static constexpr underlying kNoneValue = std::numeric_limits<underlying>::max();

  constexpr NodeId() = default;
  constexpr explicit NodeId(underlying v) : value_(v) {}

  static constexpr NodeId none() { return NodeId{}; }

  constexpr underlying index() const { return value_; }
  constexpr bool valid() const { return value_ != kNoneValue; }
  constexpr explicit operator bool() const { return valid(); }

  friend constexpr bool operator==(NodeId, NodeId) = default;
  friend constexpr auto operator<=>(NodeId, NodeId) = default;

 private:
  underlying value_ = kNoneValue;
};

}  // namespace sst

template <>
struct std::hash<sst::NodeId> {
  std::size_t operator()(sst::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.index());
  }
};
